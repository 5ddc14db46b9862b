"""Anisotropic geometry: quasi-norm, dilations, balls and parameter formulas."""

from .balls import (
    ball_mask,
    ball_membership,
    radius_fitting,
    unit_ball,
)
from .parameters import grand_maximal_order, s_min
from .quasi_norm import (
    QuasiNormRoot,
    bracket,
    dilate,
    quasi_norm,
    residual,
    solve_quasi_norm,
)

__all__ = [
    "QuasiNormRoot",
    "quasi_norm",
    "solve_quasi_norm",
    "residual",
    "dilate",
    "bracket",
    "ball_membership",
    "ball_mask",
    "unit_ball",
    "radius_fitting",
    "s_min",
    "grand_maximal_order",
]
