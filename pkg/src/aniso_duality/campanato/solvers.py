"""Best polynomial approximation in the normalized L^q(B) error."""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import lstsq
from scipy.optimize import linprog

from ..core import (
    DEFAULT_CONFIG,
    AnisotropicBall,
    ConvergenceError,
    InvalidInputError,
    SolverMethod,
)
from ..core.config import SolverConfig
from ..grid import GridFunction
from ..polyproj import OrthonormalBasis, PolynomialRep, build_basis, in_ball_values


_logger = logging.getLogger(__name__)

_TINY = 1e-300


@dataclass(frozen=True)
class BestApproximation:
    """inf_P [mean_B |g - P|^q]^{1/q} and a minimizer."""

    error: float
    polynomial: PolynomialRep
    method: SolverMethod
    iterations: int
    converged: bool


def normalized_error(residual: np.ndarray, q: float) -> float:
    """(mean |e|^q)^{1/q} over equally weighted nodes; max |e| for q = inf."""
    magnitude = np.abs(residual)
    if magnitude.size == 0:
        return 0.0
    if math.isinf(q):
        return float(magnitude.max())
    if q == 1.0:
        return float(magnitude.mean())
    peak = float(magnitude.max())
    if peak == 0.0:
        return 0.0
    # scaled by the peak so large q does not overflow
    return peak * float(np.mean((magnitude / peak) ** q)) ** (1.0 / q)


def _weighted_fit(q_values: np.ndarray, y: np.ndarray, weights: np.ndarray) -> np.ndarray:
    root = np.sqrt(weights)
    coefficients, *_ = lstsq(q_values * root[:, None], y * root, lapack_driver="gelsd")
    return coefficients


def _lp_fit(q_values: np.ndarray, y: np.ndarray, q: float) -> np.ndarray:
    """Exact discrete L^1 or L^inf fit by linear programming (HiGHS)."""
    m, k = q_values.shape
    if math.isinf(q):
        cost = np.concatenate([np.zeros(k), [1.0]])
        ones = np.ones((m, 1))
        a_ub = np.block([[-q_values, -ones], [q_values, -ones]])
        bounds = [(None, None)] * k + [(0.0, None)]
    else:
        cost = np.concatenate([np.zeros(k), np.ones(m)])
        eye = np.eye(m)
        a_ub = np.block([[-q_values, -eye], [q_values, -eye]])
        bounds = [(None, None)] * k + [(0.0, None)] * m
    b_ub = np.concatenate([-y, y])
    result = linprog(cost, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
    if not result.success:
        raise ConvergenceError("linear program failed", {"q": q, "status": result.status, "message": result.message})
    return result.x[:k]


def _lawson(
    q_values: np.ndarray, y: np.ndarray, scale: float, config: SolverConfig
) -> Tuple[np.ndarray, float, int, bool]:
    """
    Lawson's reweighting for the discrete minimax fit.

    Each weighted least-squares error (weights summing to one) is a lower bound
    for the minimax error and max |e| an upper bound.
    """
    m = y.size
    weights = np.full(m, 1.0 / m)
    best_c, best_upper = None, math.inf
    for iteration in range(1, config.max_iterations + 1):
        c = _weighted_fit(q_values, y, weights)
        e = y - q_values @ c
        magnitude = np.abs(e)
        upper = float(magnitude.max())
        lower = math.sqrt(float(np.sum(weights * e * e)))
        if upper < best_upper:
            best_c, best_upper = c, upper
        if upper - lower <= config.minimax_spread_tol * max(upper, scale * config.residual_floor):
            return best_c, best_upper, iteration, True
        weights = weights * magnitude
        total = float(weights.sum())
        if total <= _TINY:
            return best_c, best_upper, iteration, True
        weights /= total
    return best_c, best_upper, config.max_iterations, False


def _irls(
    q_values: np.ndarray, y: np.ndarray, q: float, scale: float, config: SolverConfig
) -> Tuple[np.ndarray, float, int, bool]:
    """Weights |e|^{q-2}, residuals floored; steps damped by 1/(q-1) when q > 2."""
    floor = config.residual_floor * scale
    damping = 1.0 / (q - 1.0) if q > 2.0 else 1.0
    c = _weighted_fit(q_values, y, np.ones(y.size))
    objective = normalized_error(y - q_values @ c, q)
    best_c, best_objective = c, objective
    for iteration in range(1, config.max_iterations + 1):
        magnitude = np.maximum(np.abs(y - q_values @ c), floor)
        weights = magnitude ** (q - 2.0)
        weights /= weights.max()
        target = _weighted_fit(q_values, y, weights)
        c = c + damping * (target - c)
        new_objective = normalized_error(y - q_values @ c, q)
        if new_objective < best_objective:
            best_c, best_objective = c, new_objective
        if abs(objective - new_objective) <= config.objective_tol * max(new_objective, floor):
            return best_c, best_objective, iteration, True
        objective = new_objective
    return best_c, best_objective, config.max_iterations, False


def best_poly_error(
    g: GridFunction,
    ball: AnisotropicBall,
    q: float,
    s: int,
    basis: Optional[OrthonormalBasis] = None,
    config: Optional[SolverConfig] = None,
) -> BestApproximation:
    """
    Minimize [mean over in-ball nodes of |g - P|^q]^{1/q} over P in P_s.

    q = 2 is the projection residual, q = inf uses Lawson's reweighting and
    other q use IRLS. q in {1, inf} fall back to an exact linear program when
    the iteration cap is reached.

    Raises:
        ConvergenceError: If IRLS does not converge for q outside {1, 2, inf}
    """
    if math.isnan(q) or q < 1.0:
        raise InvalidInputError(f"q must lie in [1, inf], got {q}")
    config = config or DEFAULT_CONFIG.solver
    if basis is None:
        basis = build_basis(ball, s, grid=g.grid)
    y = in_ball_values(g, basis)
    q_values = basis.orthonormal_values
    scale = float(np.max(np.abs(y))) if y.size else 0.0

    if scale == 0.0:
        c = np.zeros(basis.size)
        method, iterations, converged = SolverMethod.PROJECTION, 0, True
    elif q == 2.0:
        c = basis.weight * (q_values.T @ y)
        method, iterations, converged = SolverMethod.PROJECTION, 0, True
    elif math.isinf(q):
        c, _, iterations, converged = _lawson(q_values, y, scale, config)
        method = SolverMethod.LAWSON
    else:
        c, _, iterations, converged = _irls(q_values, y, q, scale, config)
        method = SolverMethod.IRLS

    if not converged:
        diagnostics = {"q": q, "s": s, "iterations": iterations, "radius": ball.radius}
        if (math.isinf(q) or q == 1.0) and config.lp_polish:
            _logger.debug("polishing q=%s fit with linprog after %d iterations", q, iterations)
            polished = _lp_fit(q_values, y, q)
            if normalized_error(y - q_values @ polished, q) <= normalized_error(y - q_values @ c, q):
                c, method = polished, SolverMethod.LINPROG
            converged = True
        else:
            raise ConvergenceError("best approximation did not converge", diagnostics)

    error = normalized_error(y - q_values @ c, q)
    polynomial = basis.polynomial(basis.transform.T @ c)
    return BestApproximation(
        error=error, polynomial=polynomial, method=method, iterations=iterations, converged=converged
    )


def unnormalized_error(approximation: BestApproximation, basis: OrthonormalBasis, q: float) -> float:
    """||g - P||_{L^q(B)}: the normalized error times |B|^{1/q} (quadrature volume)."""
    if math.isinf(q):
        return approximation.error
    return approximation.error * basis.volume ** (1.0 / q)
