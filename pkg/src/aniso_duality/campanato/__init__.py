"""Anisotropic mixed-norm Campanato seminorm: inner best approximation, outer ball search."""

from .search import BallSearch, SearchOutcome, ball_fits
from .seminorm import (
    ball_weight,
    campanato_seminorm,
    q_monotonicity_check,
    score_ball,
)
from .solvers import BestApproximation, best_poly_error, normalized_error, unnormalized_error

__all__ = [
    "BestApproximation",
    "best_poly_error",
    "normalized_error",
    "unnormalized_error",
    "BallSearch",
    "SearchOutcome",
    "ball_fits",
    "ball_weight",
    "score_ball",
    "campanato_seminorm",
    "q_monotonicity_check",
]
