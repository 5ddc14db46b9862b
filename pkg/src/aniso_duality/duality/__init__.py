"""The pairing of atoms with Campanato functions and its quantitative bounds."""

from .bounds import functional_norm_bound, single_ball_bound
from .dual_norm import ExtremalAtom, dual_norm_on_ball, extremal_atom
from .pairing import pairing

__all__ = [
    "pairing",
    "single_ball_bound",
    "functional_norm_bound",
    "dual_norm_on_ball",
    "ExtremalAtom",
    "extremal_atom",
]
