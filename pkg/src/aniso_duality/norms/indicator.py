"""Ball measures: quadrature volume and mixed norm of indicators, memoized."""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from ..core import (
    DEFAULT_CONFIG,
    AnisotropicBall,
    DegenerateDomainError,
    ExponentVector,
    IncompatibleParametersError,
)
from ..grid import Grid, ball_grid_mask
from .mixed import iterated_norm


_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BallMeasures:
    """|B| and ||chi_B||_{L^p} as seen by one lattice."""

    volume: float
    indicator_norm: float
    nodes: int

    @property
    def weight(self) -> float:
        """|B| / ||chi_B||_{L^p}, the Campanato ball weight."""
        return self.volume / self.indicator_norm

    def atom_size(self, r: float) -> float:
        """|B|^{1/r} / ||chi_B||_{L^p}, the atom size bound."""
        if math.isinf(r):
            return 1.0 / self.indicator_norm
        return self.volume ** (1.0 / r) / self.indicator_norm


@lru_cache(maxsize=8192)
def ball_measures(ball: AnisotropicBall, p: ExponentVector, grid: Grid) -> BallMeasures:
    """
    Quadrature volume and indicator norm of ball on grid.

    Raises:
        DegenerateDomainError: If no node of grid lies in the ball
    """
    if ball.n != grid.n or p.n != grid.n:
        raise IncompatibleParametersError("ball, exponent and grid dimensions differ")
    sub, _ = grid.crop_to_box(*ball.bounding_box)
    mask = ball_grid_mask(ball, sub)
    nodes = int(mask.sum())
    if nodes == 0:
        raise DegenerateDomainError("no grid node falls inside the ball")
    chi = mask.astype(float)
    volume = nodes * sub.cell_weight
    norm = iterated_norm(chi, sub.spacing, p.p)
    _logger.debug("ball measures r=%.4g nodes=%d volume=%.6g norm=%.6g", ball.radius, nodes, volume, norm)
    return BallMeasures(volume=volume, indicator_norm=norm, nodes=nodes)


def bounding_grid(ball: AnisotropicBall, resolution: Optional[Sequence[int]] = None) -> Grid:
    """Lattice on the ball's bounding box (config default resolution when None)."""
    if resolution is None:
        resolution = DEFAULT_CONFIG.grid.resolution(ball.n)
    return Grid.over_box(ball.bounding_box, resolution)


def indicator_mixed_norm(
    ball: AnisotropicBall,
    p: ExponentVector,
    resolution: Optional[Sequence[int]] = None,
) -> float:
    """||chi_B||_{L^p} sampled over the ball's bounding box; memoized per (B, p, resolution)."""
    return ball_measures(ball, p, bounding_grid(ball, resolution)).indicator_norm


def rectangle_mixed_norm(
    lower: Sequence[float],
    upper: Sequence[float],
    p: ExponentVector,
    resolution: Optional[Sequence[int]] = None,
) -> float:
    """||chi_R||_{L^p} for the axis-aligned rectangle R = [lower, upper], sampled on R itself."""
    if len(lower) != p.n or len(upper) != p.n:
        raise IncompatibleParametersError("rectangle and exponent dimensions differ")
    if resolution is None:
        resolution = DEFAULT_CONFIG.grid.resolution(p.n)
    grid = Grid(tuple(lower), tuple(upper), tuple(resolution))
    return iterated_norm(np.ones(grid.shape), grid.spacing, p.p)


def rectangle_closed_form(lower: Sequence[float], upper: Sequence[float], p: ExponentVector) -> float:
    """prod |I_i|^{1/p_i}."""
    total = 1.0
    for lo, hi, p_i in zip(lower, upper, p.p):
        if not math.isinf(p_i):
            total *= (hi - lo) ** (1.0 / p_i)
    return total


def clear_measure_cache() -> None:
    """Drop memoized ball measures."""
    ball_measures.cache_clear()
