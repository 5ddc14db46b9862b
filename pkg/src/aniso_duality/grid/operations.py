"""Sampling, quadrature, ball restriction and grid transfer."""

import logging
from typing import Optional, Sequence

import numpy as np
from scipy.interpolate import RegularGridInterpolator

from ..core import (
    AnisotropicBall,
    DegenerateDomainError,
    FamilyKind,
    FunctionFamily,
    GridFormatError,
    InvalidInputError,
)
from ..geometry import ball_mask
from .csv_io import load_grid_csv
from .lattice import Box, Grid, GridFunction
from .registry import get_family


_logger = logging.getLogger(__name__)


def sample(
    family: FunctionFamily,
    box: Optional[Box] = None,
    resolution: Optional[Sequence[int]] = None,
) -> GridFunction:
    """
    Evaluate a seeded family on the midpoint lattice of box.

    Deterministic: the same (family, box, resolution) always yields identical
    values. csv-import families take box and resolution from the file; when
    given, they must agree with it.

    Raises:
        InvalidInputError: On a missing box/resolution or a resolution below 2
        DegenerateDomainError: If some lo_i >= hi_i
        GridFormatError: On csv-import layout problems
    """
    if family.kind == FamilyKind.CSV_IMPORT:
        if "path" not in family.params:
            raise InvalidInputError("csv-import family needs a 'path' parameter")
        f = load_grid_csv(family.params["path"])
        if resolution is not None and tuple(resolution) != f.resolution:
            raise GridFormatError(f"file resolution {f.resolution} differs from requested {tuple(resolution)}")
        if box is not None and not f.grid.same_as(Grid.over_box(box, f.resolution)):
            raise GridFormatError(f"file box {f.box} differs from requested {box}")
        return f

    if box is None or resolution is None:
        raise InvalidInputError(f"family {family.kind.value!r} needs a box and a resolution")
    if any(int(res) < 2 for res in resolution):
        raise InvalidInputError(f"every resolution must be >= 2, got {tuple(resolution)}")
    grid = Grid.over_box(box, resolution)
    rng = np.random.default_rng(family.seed)
    values = get_family(family.kind).evaluate(family.params, grid, rng)
    return GridFunction(grid, np.broadcast_to(values, grid.shape))


def integrate(f: GridFunction) -> float:
    """Midpoint-rule integral: cell weight times the sum of the values."""
    return float(np.sum(f.values) * f.cell_weight)


def ball_grid_mask(ball: AnisotropicBall, grid: Grid) -> np.ndarray:
    """Boolean mask of the grid nodes inside ball."""
    return ball_mask(ball, grid.coords)


def indicator(ball: AnisotropicBall, grid: Grid) -> GridFunction:
    """chi_B sampled on grid."""
    return GridFunction(grid, ball_grid_mask(ball, grid).astype(float))


def transfer(f: GridFunction, grid: Grid) -> GridFunction:
    """
    Represent f on another lattice.

    Aligned sub-grids are sliced exactly; anything else is linearly
    interpolated. f is taken to vanish outside its box.
    """
    if f.grid.same_as(grid):
        return f
    window = f.grid.window_of(grid)
    if window is not None:
        return GridFunction(grid, f.values[window])

    axes = tuple(f.grid.axis_nodes(i) for i in range(f.n))
    if any(len(nodes) < 2 for nodes in axes):
        raise InvalidInputError("interpolation needs at least two nodes per axis")
    interpolator = RegularGridInterpolator(axes, f.values, method="linear")
    inside = np.ones(grid.shape, dtype=bool)
    clipped = []
    for c, nodes, lo, hi in zip(grid.coords, axes, f.grid.lower, f.grid.upper):
        inside &= (c >= lo) & (c <= hi)
        clipped.append(np.clip(c, nodes[0], nodes[-1]))
    points = np.stack([c.ravel() for c in clipped], axis=1)
    values = interpolator(points).reshape(grid.shape)
    _logger.debug("interpolated %s onto %s", f.grid.resolution, grid.resolution)
    return GridFunction(grid, np.where(inside, values, 0.0))


def restrict_to_ball(
    f: GridFunction,
    ball: AnisotropicBall,
    resolution: Optional[Sequence[int]] = None,
) -> GridFunction:
    """
    f * chi_B on the ball's bounding box (intersected with f's box).

    Without resolution the result keeps f's own cells inside that box, with
    no resampling, so restriction is exact and idempotent. Pass a resolution
    (for example config.grid.resolution(n)) to resample the box at that
    resolution instead. Values outside B are exactly 0.

    Raises:
        DegenerateDomainError: If the ball does not meet f's box
    """
    if ball.n != f.n:
        raise InvalidInputError(f"ball lives in R^{ball.n}, function in R^{f.n}")
    lower, upper = ball.bounding_box
    if resolution is None:
        grid, window = f.grid.crop_to_box(lower, upper)
        values = f.values[window]
    else:
        grid = Grid.over_box(f.grid.intersect_box(lower, upper), resolution)
        values = transfer(f, grid).values
    mask = ball_grid_mask(ball, grid)
    if not mask.any():
        raise DegenerateDomainError("no grid node falls inside the ball")
    return GridFunction(grid, np.where(mask, values, 0.0))
