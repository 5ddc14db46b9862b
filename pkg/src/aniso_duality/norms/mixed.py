"""Mixed-norm Lebesgue quasi-norms by iterated quadrature."""

import math
from typing import Sequence

import numpy as np

from ..core import AnisotropicBall, ExponentVector, IncompatibleParametersError, require_positive
from ..grid import GridFunction, restrict_to_ball


def iterated_norm(values: np.ndarray, spacing: Sequence[float], p: Sequence[float]) -> float:
    """
    Reduce |values| axis by axis, axis 0 innermost.

    The running array S holds Q^e where Q is the partial norm and e the last
    finite exponent; a finite p_i integrates Q^{p_i} = S^{p_i/e}, an infinite
    p_i takes the max (which commutes with the power).
    """
    s = np.abs(np.asarray(values, dtype=float))
    e = 1.0
    for p_i, h in zip(p, spacing):
        if math.isinf(p_i):
            s = s.max(axis=0)
            continue
        if p_i != e:
            s = np.maximum(s, 0.0) ** (p_i / e)
        s = s.sum(axis=0) * h
        e = p_i
    return max(float(s), 0.0) ** (1.0 / e)


def mixed_lebesgue_norm(f: GridFunction, p: ExponentVector) -> float:
    """
    ||f||_{L^p} with x_1 integrated first and x_n last.

    p_i = inf means the max over that axis's nodes.

    Raises:
        IncompatibleParametersError: If p's length differs from f's dimension
    """
    if p.n != f.n:
        raise IncompatibleParametersError(f"p has length {p.n} but f lives in R^{f.n}")
    return iterated_norm(f.values, f.grid.spacing, p.p)


def lp_norm(f: GridFunction, p: float) -> float:
    """Classical L^p quadrature norm, computed directly with the full cell weight."""
    require_positive("p", p)
    values = np.abs(f.values)
    if math.isinf(p):
        return float(values.max())
    return float(np.sum(values ** p) * f.cell_weight) ** (1.0 / p)


def lr_norm_on_ball(f: GridFunction, ball: AnisotropicBall, r: float) -> float:
    """||f||_{L^r(B)}; r = inf is the max of |f| over in-ball nodes."""
    require_positive("r", r)
    return lp_norm(restrict_to_ball(f, ball), r)
