"""Anisotropic ball membership, grid masks and scaling."""

from typing import Sequence

import numpy as np

from ..core import AnisotropicBall, AnisotropyVector, InvalidInputError
from .quasi_norm import solve_quasi_norm


def ball_membership(ball: AnisotropicBall, y: Sequence[float]) -> bool:
    """
    True iff |y - center|_a < radius (strict, boundary excluded).

    The comparison uses the upper end of the root bracket, so a point whose
    quasi-norm equals the radius is never reported inside.
    """
    if len(y) != ball.n:
        raise InvalidInputError(f"point has dimension {len(y)}, ball has {ball.n}")
    offset = tuple(float(yi) - ci for yi, ci in zip(y, ball.center))
    return solve_quasi_norm(ball.anisotropy, offset).upper < ball.radius


def ball_mask(ball: AnisotropicBall, coords: Sequence[np.ndarray]) -> np.ndarray:
    """
    Vectorized membership for broadcastable coordinate arrays.

    Uses B_a(x, r) = x + r^a B(0, 1) with B(0, 1) the Euclidean unit ball:
    y is inside iff sum ((y_i - x_i) / r^{a_i})^2 < 1.
    """
    if len(coords) != ball.n:
        raise InvalidInputError(f"got {len(coords)} coordinate arrays for a ball in R^{ball.n}")
    total = 0.0
    for axis_coords, c, h in zip(coords, ball.center, ball.half_widths):
        total = total + ((np.asarray(axis_coords, dtype=float) - c) / h) ** 2
    return np.asarray(total < 1.0)


def unit_ball(a: AnisotropyVector) -> AnisotropicBall:
    """B_a(0, 1), which coincides with the Euclidean unit ball."""
    return AnisotropicBall(center=(0.0,) * a.n, radius=1.0, anisotropy=a)


def radius_fitting(a: AnisotropyVector, half_width_limits: Sequence[float]) -> float:
    """Largest radius whose per-axis half-widths stay within the given limits."""
    if any(w <= 0.0 for w in half_width_limits):
        return 0.0
    return min(w ** (1.0 / ai) for w, ai in zip(half_width_limits, a.a)) * (1.0 - 1e-12)
