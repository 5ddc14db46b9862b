"""Quantitative bounds for the pairing of atoms with Campanato functions."""

import logging
import math
from typing import Optional

from ..atoms import Atom, AtomicCombination, aggregate_norm
from ..campanato import best_poly_error, campanato_seminorm, unnormalized_error
from ..core import (
    DEFAULT_CONFIG,
    BallSearchDomain,
    CampanatoParams,
    HarnessConfig,
    IncompatibleParametersError,
    InequalityCheck,
    conjugate_exponent,
)
from ..geometry import s_min
from ..grid import GridFunction
from ..norms import ball_measures
from ..polyproj import build_basis
from .pairing import pairing


_logger = logging.getLogger(__name__)


def single_ball_bound(atom: Atom, g: GridFunction, config: Optional[HarnessConfig] = None) -> InequalityCheck:
    """
    |<a, g>| <= (|B|^{1/r} / ||chi_B||_{L^p}) inf_P ||g - P||_{L^{r'}(B)}.

    Every quantity lives on the atom's lattice. The rhs must also equal
    weight(B) times the normalized r'-error; a mismatch fails the check.
    """
    config = config or DEFAULT_CONFIG
    tolerances = config.effective_tolerances()
    r_dual = conjugate_exponent(atom.params.r)
    grid = atom.function.grid

    basis = build_basis(atom.ball, atom.params.s, grid=grid)
    approximation = best_poly_error(g, atom.ball, r_dual, atom.params.s, basis=basis, config=config.solver)
    measures = ball_measures(atom.ball, atom.params.p, grid)
    factor = measures.atom_size(atom.params.r)

    lhs = abs(pairing(atom.function, g))
    rhs = factor * unnormalized_error(approximation, basis, r_dual)

    dominated = measures.weight * approximation.error
    identity_gap = abs(dominated - rhs)
    identity_ok = identity_gap <= tolerances.identity * max(abs(rhs), tolerances.single_ball_abs)
    passed = identity_ok and lhs <= rhs * (1.0 + tolerances.single_ball) + tolerances.single_ball_abs
    if not identity_ok:
        _logger.warning("weight * error differs from the Holder bound by %.3e", identity_gap)
    return InequalityCheck(
        lhs=lhs,
        rhs=rhs,
        passed=passed,
        detail=f"r'={r_dual:.6g}, method={approximation.method.value}, identity_gap={identity_gap:.3e}",
    )


def _check_combination(c: AtomicCombination, params: CampanatoParams) -> None:
    if not c.p.within_unit_cube():
        raise IncompatibleParametersError(f"the functional bound needs p in (0, 1]^n, got {c.p.p}")
    if params.a != c.anisotropy or params.p != c.p:
        raise IncompatibleParametersError("Campanato parameters differ from the atoms' (a, p)")
    minimum = s_min(c.anisotropy, c.p)
    for atom in c.atoms:
        if atom.params.s != params.s or params.s < minimum:
            raise IncompatibleParametersError(f"atoms and seminorm need a shared s >= {minimum}")
        r_dual = conjugate_exponent(atom.params.r)
        if not math.isclose(r_dual, params.q, rel_tol=1e-12) and not (math.isinf(r_dual) and math.isinf(params.q)):
            raise IncompatibleParametersError(f"seminorm exponent q={params.q} is not conjugate to r={atom.params.r}")


def functional_norm_bound(
    c: AtomicCombination,
    g: GridFunction,
    params: CampanatoParams,
    domain: BallSearchDomain,
    config: Optional[HarnessConfig] = None,
) -> InequalityCheck:
    """
    |<sum lambda_i a_i, g>| <= aggregate_norm(c) * campanato_seminorm(g).

    The seminorm search always includes every atom's ball, so the searched
    supremum dominates each per-atom Holder bound.

    Raises:
        IncompatibleParametersError: If p is outside (0, 1]^n, q is not
            conjugate to the atoms' r, or the parameter sets differ
    """
    _check_combination(c, params)
    config = config or DEFAULT_CONFIG
    tolerances = config.effective_tolerances()

    lhs = abs(sum(lam * pairing(atom.function, g) for atom, lam in zip(c.atoms, c.lambdas)))
    augmented = domain.with_balls([atom.ball for atom in c.atoms])
    seminorm = campanato_seminorm(g, params, augmented, config)
    aggregate = aggregate_norm(c)
    rhs = aggregate * seminorm.value
    return InequalityCheck(
        lhs=lhs,
        rhs=rhs,
        passed=lhs <= rhs * (1.0 + tolerances.functional) + tolerances.single_ball_abs,
        detail=(
            f"{len(c)} atoms, aggregate={aggregate:.6g}, seminorm={seminorm.value:.6g}, "
            f"witness={seminorm.witness.center}@{seminorm.witness.radius:.4g}"
        ),
    )
