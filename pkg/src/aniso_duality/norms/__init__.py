"""Mixed-norm Lebesgue quasi-norms and ball measures."""

from .indicator import (
    BallMeasures,
    ball_measures,
    bounding_grid,
    clear_measure_cache,
    indicator_mixed_norm,
    rectangle_closed_form,
    rectangle_mixed_norm,
)
from .mixed import iterated_norm, lp_norm, lr_norm_on_ball, mixed_lebesgue_norm

__all__ = [
    "mixed_lebesgue_norm",
    "iterated_norm",
    "lp_norm",
    "lr_norm_on_ball",
    "BallMeasures",
    "ball_measures",
    "bounding_grid",
    "indicator_mixed_norm",
    "rectangle_mixed_norm",
    "rectangle_closed_form",
    "clear_measure_cache",
]
