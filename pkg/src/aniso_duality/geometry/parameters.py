"""Parameter formulas: minimal moment degree and grand maximal order."""

import math

from ..core import AnisotropyVector, ExponentVector, InvalidInputError


_FLOOR_GUARD = 1e-12


def s_min(a: AnisotropyVector, p: ExponentVector) -> int:
    """
    Smallest admissible moment degree max(0, floor((nu / a_-)(1/p_- - 1))).

    A guard of 1e-12 absorbs round-off in 1/p_- so that, e.g., p_- = 2/3 in
    floating point still lands on the intended integer.
    """
    if a.n != p.n:
        raise InvalidInputError(f"a has dimension {a.n} but p has {p.n}")
    p_minus = p.p_minus
    if not math.isfinite(p_minus):
        raise InvalidInputError("p_- must be finite")
    value = (a.nu / a.a_minus) * (1.0 / p_minus - 1.0)
    return max(0, math.floor(value + _FLOOR_GUARD))


def grand_maximal_order(a: AnisotropyVector, p: ExponentVector) -> int:
    """
    N_p = floor(nu (a_+/a_-)(1/p_underline + 1) + nu + 2 a_+) + 1.

    Reported for documentation only; no maximal function is evaluated.
    """
    if a.n != p.n:
        raise InvalidInputError(f"a has dimension {a.n} but p has {p.n}")
    p_under = p.p_underline
    value = a.nu * (a.a_plus / a.a_minus) * (1.0 / p_under + 1.0) + a.nu + 2.0 * a.a_plus
    return math.floor(value + _FLOOR_GUARD) + 1
