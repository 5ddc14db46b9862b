"""Invariant enforcement helpers."""

import math

from .errors import InvalidInputError


def require_finite(name: str, x: float) -> float:
    """
    Require that a value is finite (not NaN or inf).

    Raises:
        InvalidInputError: If value is not finite
    """
    if not math.isfinite(x):
        raise InvalidInputError(f"{name} must be finite, got {x}")
    return x


def require_positive(name: str, x: float) -> float:
    """Require a strictly positive value (inf allowed)."""
    if math.isnan(x) or x <= 0.0:
        raise InvalidInputError(f"{name} must be positive, got {x}")
    return x


def conjugate_exponent(r: float) -> float:
    """Return r' with 1/r + 1/r' = 1 for r in [1, inf]."""
    if r < 1.0:
        raise InvalidInputError(f"exponent must be >= 1, got {r}")
    if r == 1.0:
        return math.inf
    if math.isinf(r):
        return 1.0
    return r / (r - 1.0)
