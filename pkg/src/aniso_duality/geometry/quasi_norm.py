"""Anisotropic homogeneous quasi-norm, dilations and the anisotropic bracket."""

import math
from dataclasses import dataclass
from typing import Sequence, Tuple

from ..core import AnisotropyVector, InvalidInputError


ROOT_REL_TOL = 1e-12
_MAX_BRACKET_STEPS = 2100
_MAX_BISECTIONS = 200


@dataclass(frozen=True)
class QuasiNormRoot:
    """Root t0 of sum x_i^2 / t^{2 a_i} = 1 with its final bisection bracket."""

    root: float
    lower: float
    upper: float
    iterations: int


def _as_point(a: AnisotropyVector, x: Sequence[float]) -> Tuple[float, ...]:
    point = tuple(float(v) for v in x)
    if len(point) != a.n:
        raise InvalidInputError(f"point has dimension {len(point)}, anisotropy has {a.n}")
    for i, v in enumerate(point):
        if not math.isfinite(v):
            raise InvalidInputError(f"x[{i}] must be finite, got {v}")
    return point


def residual(a: AnisotropyVector, x: Sequence[float], t: float) -> float:
    """
    F(t) - 1 where F(t) = sum x_i^2 / t^{2 a_i}.

    F is strictly decreasing on (0, inf) for x != 0, so the residual changes
    sign exactly once. Terms are evaluated in log space to avoid overflow.
    """
    log_t = math.log(t)
    total = 0.0
    for xi, ai in zip(x, a.a):
        if xi != 0.0:
            total += math.exp(2.0 * (math.log(abs(xi)) - ai * log_t))
    return total - 1.0


def solve_quasi_norm(
    a: AnisotropyVector,
    x: Sequence[float],
    rel_tol: float = ROOT_REL_TOL,
) -> QuasiNormRoot:
    """
    Solve for |x|_a by geometric bracketing from the Euclidean norm, then bisection.

    Raises:
        InvalidInputError: If x has a non-finite component or the wrong dimension
    """
    point = _as_point(a, x)
    if all(v == 0.0 for v in point):
        return QuasiNormRoot(root=0.0, lower=0.0, upper=0.0, iterations=0)

    t = math.sqrt(math.fsum(v * v for v in point))
    if residual(a, point, t) > 0.0:
        lower, upper = t, 2.0 * t
        steps = 0
        while residual(a, point, upper) > 0.0:
            lower, upper = upper, 2.0 * upper
            steps += 1
            if steps > _MAX_BRACKET_STEPS:
                raise InvalidInputError(f"cannot bracket quasi-norm root for x={point}")
    else:
        lower, upper = 0.5 * t, t
        steps = 0
        while residual(a, point, lower) <= 0.0:
            lower, upper = 0.5 * lower, lower
            steps += 1
            if steps > _MAX_BRACKET_STEPS:
                raise InvalidInputError(f"cannot bracket quasi-norm root for x={point}")

    iterations = 0
    while upper - lower > rel_tol * upper and iterations < _MAX_BISECTIONS:
        mid = 0.5 * (lower + upper)
        if residual(a, point, mid) > 0.0:
            lower = mid
        else:
            upper = mid
        iterations += 1

    return QuasiNormRoot(
        root=0.5 * (lower + upper), lower=lower, upper=upper, iterations=iterations
    )


def quasi_norm(a: AnisotropyVector, x: Sequence[float]) -> float:
    """
    Anisotropic quasi-norm |x|_a: 0 at the origin, otherwise the unique t0 > 0
    with sum x_i^2 / t0^{2 a_i} = 1 (to relative tolerance 1e-12).
    """
    return solve_quasi_norm(a, x).root


def dilate(a: AnisotropyVector, t: float, x: Sequence[float]) -> Tuple[float, ...]:
    """Anisotropic dilation t^a x = (t^{a_1} x_1, ..., t^{a_n} x_n)."""
    if math.isnan(t) or t < 0.0:
        raise InvalidInputError(f"dilation factor must be nonnegative, got {t}")
    point = _as_point(a, x)
    return tuple((t ** ai) * xi for ai, xi in zip(a.a, point))


def bracket(a: AnisotropyVector, x: Sequence[float]) -> float:
    """Anisotropic bracket <x>_a = |(1, x)|_{(1, a)}; always >= 1."""
    point = _as_point(a, x)
    return quasi_norm(a.extended(), (1.0,) + point)
