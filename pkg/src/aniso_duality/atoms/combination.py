"""Finite atomic combinations and their aggregate quasi-norm."""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..core import (
    DEFAULT_CONFIG,
    AnisotropyVector,
    DegenerateDomainError,
    ExponentVector,
    IncompatibleParametersError,
    InequalityCheck,
    InvalidInputError,
)
from ..core.config import ToleranceConfig
from ..grid import Grid, ball_grid_mask
from ..norms import iterated_norm
from .atom import Atom


@dataclass(frozen=True, eq=False)
class AtomicCombination:
    """sum_i lambda_i a_i with real coefficients; all atoms share (a, p)."""

    atoms: Tuple[Atom, ...]
    lambdas: Tuple[float, ...]

    def __post_init__(self):
        """Validate lengths, finiteness and shared parameters."""
        atoms = tuple(self.atoms)
        lambdas = tuple(float(lam) for lam in self.lambdas)
        if not atoms:
            raise InvalidInputError("a combination needs at least one atom")
        if len(atoms) != len(lambdas):
            raise InvalidInputError(f"{len(atoms)} atoms but {len(lambdas)} coefficients")
        if not all(math.isfinite(lam) for lam in lambdas):
            raise InvalidInputError("coefficients must be finite")
        first = atoms[0]
        for atom in atoms[1:]:
            if atom.ball.anisotropy != first.ball.anisotropy or atom.params.p != first.params.p:
                raise IncompatibleParametersError("atoms must share the anisotropy and exponent vectors")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "lambdas", lambdas)

    @property
    def anisotropy(self) -> AnisotropyVector:
        return self.atoms[0].ball.anisotropy

    @property
    def p(self) -> ExponentVector:
        return self.atoms[0].params.p

    @property
    def n(self) -> int:
        return self.anisotropy.n

    def __len__(self) -> int:
        return len(self.atoms)

    def union_grid(self, resolution: Optional[Sequence[int]] = None) -> Grid:
        """Lattice on the union of the balls' bounding boxes."""
        lowers, uppers = zip(*(atom.ball.bounding_box for atom in self.atoms))
        lower = tuple(min(axis) for axis in zip(*lowers))
        upper = tuple(max(axis) for axis in zip(*uppers))
        if resolution is None:
            resolution = DEFAULT_CONFIG.grid.resolution(self.n)
        return Grid(lower, upper, tuple(resolution))


def aggregate_norm(c: AtomicCombination, resolution: Optional[Sequence[int]] = None) -> float:
    """
    || ( sum_i [ |lambda_i| chi_{B_i} / ||chi_{B_i}||_{L^p} ]^{p_} )^{1/p_} ||_{L^p}.

    Every indicator and its norm are sampled on one lattice over the union of
    the balls' bounding boxes.

    Raises:
        DegenerateDomainError: If some ball contains no node of that lattice
    """
    grid = c.union_grid(resolution)
    p = c.p
    p_low = p.p_underline
    total = np.zeros(grid.shape)
    for atom, lam in zip(c.atoms, c.lambdas):
        mask = ball_grid_mask(atom.ball, grid)
        if not mask.any():
            raise DegenerateDomainError(f"ball at {atom.ball.center} holds no node of the union lattice")
        if lam == 0.0:
            continue
        chi = mask.astype(float)
        norm = iterated_norm(chi, grid.spacing, p.p)
        total += (abs(lam) / norm) ** p_low * chi
    return iterated_norm(total ** (1.0 / p_low), grid.spacing, p.p)


def l1_lower_bound_check(
    c: AtomicCombination,
    tolerances: Optional[ToleranceConfig] = None,
    resolution: Optional[Sequence[int]] = None,
) -> InequalityCheck:
    """
    sum |lambda_i| <= aggregate_norm(c), allowing twice the grid tolerance.

    Raises:
        IncompatibleParametersError: If p lies outside (0, 1]^n
    """
    if not c.p.within_unit_cube():
        raise IncompatibleParametersError(f"the l1 lower bound needs p in (0, 1]^n, got {c.p.p}")
    tolerances = tolerances or DEFAULT_CONFIG.tolerances
    lhs = float(sum(abs(lam) for lam in c.lambdas))
    rhs = aggregate_norm(c, resolution)
    return InequalityCheck(
        lhs=lhs,
        rhs=rhs,
        passed=lhs <= rhs * (1.0 + 2.0 * tolerances.grid),
        detail=f"{len(c)} atoms, p_={c.p.p_underline:.4g}",
    )
