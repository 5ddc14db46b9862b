"""(p, r, s)-atoms: construction from a function and independent validation."""

import logging
from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from ..core import (
    DEFAULT_CONFIG,
    AnisotropicBall,
    AtomParams,
    DegenerateDomainError,
    DegenerateInputError,
    IncompatibleParametersError,
    ValidationRecord,
)
from ..core.config import ToleranceConfig
from ..geometry import s_min
from ..grid import GridFunction, ball_grid_mask, restrict_to_ball
from ..norms import ball_measures, lp_norm
from ..polyproj import build_basis, multi_indices, project_values, vandermonde


_logger = logging.getLogger(__name__)

DEGENERACY_RATIO = 1e-12
DEGENERATE_MESSAGE = "degenerate: input is polynomial on ball"


@dataclass(frozen=True, eq=False)
class Atom:
    """An atom sampled on the cells of its generating grid that meet the ball."""

    function: GridFunction
    ball: AnisotropicBall
    params: AtomParams
    evidence: ValidationRecord
    seed: Optional[int] = None

    @property
    def n(self) -> int:
        return self.ball.n

    @property
    def size_bound(self) -> float:
        """|B|^{1/r} / ||chi_B||_{L^p} on the atom's grid."""
        return ball_measures(self.ball, self.params.p, self.function.grid).atom_size(self.params.r)

    def with_function(self, function: GridFunction) -> "Atom":
        """Same ball and parameters, new values; evidence is not recomputed."""
        return replace(self, function=function)


def check_atom_params(ball: AnisotropicBall, params: AtomParams) -> None:
    """
    Raises:
        IncompatibleParametersError: On a dimension mismatch or s below s_min(a, p)
    """
    if params.p.n != ball.n:
        raise IncompatibleParametersError(f"p has length {params.p.n}, ball lives in R^{ball.n}")
    minimum = s_min(ball.anisotropy, params.p)
    if params.s < minimum:
        raise IncompatibleParametersError(f"s={params.s} is below the minimal moment order {minimum}")


def make_atom(
    f: GridFunction,
    ball: AnisotropicBall,
    params: AtomParams,
    seed: Optional[int] = None,
    tolerances: Optional[ToleranceConfig] = None,
) -> Atom:
    """
    Restrict f to ball, remove Pi_B f, scale to the size bound.

    The result vanishes off the ball, has zero moments up to degree s and
    ||a||_{L^r} = |B|^{1/r} / ||chi_B||_{L^p} on the grid of f.

    Raises:
        IncompatibleParametersError: If s < s_min(a, p) or dimensions differ
        DegenerateInputError: If f - Pi_B f is negligible (f is a polynomial on B)
    """
    check_atom_params(ball, params)
    restricted = restrict_to_ball(f, ball)
    basis = build_basis(ball, params.s, grid=restricted.grid)

    inside = restricted.values[basis.mask]
    residual_inside = inside - basis.design @ project_values(inside, basis)
    residual = np.zeros(restricted.grid.shape)
    residual[basis.mask] = residual_inside
    residual = restricted.with_values(residual)

    f_norm = lp_norm(restricted, params.r)
    residual_norm = lp_norm(residual, params.r)
    if f_norm == 0.0 or residual_norm <= DEGENERACY_RATIO * f_norm:
        raise DegenerateInputError(DEGENERATE_MESSAGE)

    target = ball_measures(ball, params.p, restricted.grid).atom_size(params.r)
    function = residual * (target / residual_norm)
    evidence = check_atom_conditions(function, ball, params, tolerances)
    if not evidence.passed:
        _logger.warning("constructed atom failed validation: %s", evidence.model_dump())
    return Atom(function=function, ball=ball, params=params, evidence=evidence, seed=seed)


def moment_residual(function: GridFunction, ball: AnisotropicBall, s: int) -> float:
    """max_alpha |sum w a u^alpha| / ||a||_{L^1}, u the ball-adapted coordinates."""
    grid = function.grid
    l1 = float(np.sum(np.abs(function.values)) * grid.cell_weight)
    if l1 == 0.0:
        return 0.0
    u = [(c - x0) / h for c, x0, h in zip(grid.coords, ball.center, ball.half_widths)]
    design = vandermonde(u, multi_indices(ball.n, s))
    moments = grid.cell_weight * (design.T @ function.values.ravel())
    return float(np.max(np.abs(moments))) / l1


def check_atom_conditions(
    f: GridFunction,
    ball: AnisotropicBall,
    params: AtomParams,
    tolerances: Optional[ToleranceConfig] = None,
) -> ValidationRecord:
    """Measure support leak, size ratio and moment residual of sampled values on ball."""
    tolerances = tolerances or DEFAULT_CONFIG.tolerances
    mask = ball_grid_mask(ball, f.grid)

    outside = np.abs(f.values[~mask])
    leak = float(outside.max()) if outside.size else 0.0

    try:
        bound = ball_measures(ball, params.p, f.grid).atom_size(params.r)
        ratio = lp_norm(f, params.r) / bound
    except DegenerateDomainError as exc:
        _logger.warning("size bound unavailable: %s", exc)
        ratio = float("inf")

    residual = moment_residual(f, ball, params.s)
    return ValidationRecord(
        support_ok=leak == 0.0,
        support_leak=leak,
        size_ok=ratio <= 1.0 + tolerances.atom_size,
        size_ratio=ratio,
        moments_ok=residual <= tolerances.atom_moment,
        moment_residual=residual,
    )


def validate_atom(atom: Atom, tolerances: Optional[ToleranceConfig] = None) -> ValidationRecord:
    """
    Recompute the support, size and moment conditions from the stored values.

    Failures are reported in the record, never raised.
    """
    return check_atom_conditions(atom.function, atom.ball, atom.params, tolerances)
