"""Midpoint lattices and sampled functions on axis-aligned boxes."""

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core import DegenerateDomainError, IncompatibleParametersError, InvalidInputError


Box = Tuple[Tuple[float, ...], Tuple[float, ...]]

_ALIGN_TOL = 1e-6
_SPACING_TOL = 1e-9
_EDGE_GUARD = 1e-9


@dataclass(frozen=True)
class Grid:
    """
    Midpoint lattice on prod [lower_i, upper_i] with resolution_i cells per axis.

    Axis i of every value array corresponds to coordinate x_{i+1}; flattened
    values are row-major (the last axis varies fastest).
    """

    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    resolution: Tuple[int, ...]

    def __post_init__(self):
        """Validate dimensions and bounds."""
        object.__setattr__(self, "lower", tuple(float(v) for v in self.lower))
        object.__setattr__(self, "upper", tuple(float(v) for v in self.upper))
        object.__setattr__(self, "resolution", tuple(int(v) for v in self.resolution))
        n = len(self.lower)
        if not 1 <= n <= 3:
            raise InvalidInputError(f"grids support dimensions 1-3, got {n}")
        if len(self.upper) != n or len(self.resolution) != n:
            raise InvalidInputError("lower, upper and resolution must have equal length")
        for i, (lo, hi, res) in enumerate(zip(self.lower, self.upper, self.resolution)):
            if not (math.isfinite(lo) and math.isfinite(hi)):
                raise InvalidInputError(f"axis {i} bounds must be finite")
            if hi <= lo:
                raise DegenerateDomainError(f"axis {i} is degenerate: [{lo}, {hi}]")
            if res < 1:
                raise InvalidInputError(f"axis {i} resolution must be positive, got {res}")

    @classmethod
    def over_box(cls, box: Box, resolution: Sequence[int]) -> "Grid":
        """Grid on box = (lower, upper)."""
        lower, upper = box
        return cls(lower=tuple(lower), upper=tuple(upper), resolution=tuple(resolution))

    @property
    def n(self) -> int:
        return len(self.lower)

    @property
    def box(self) -> Box:
        return self.lower, self.upper

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.resolution

    @property
    def size(self) -> int:
        return int(np.prod(self.resolution))

    @property
    def widths(self) -> Tuple[float, ...]:
        return tuple(hi - lo for lo, hi in zip(self.lower, self.upper))

    @property
    def spacing(self) -> Tuple[float, ...]:
        return tuple(w / res for w, res in zip(self.widths, self.resolution))

    @property
    def cell_weight(self) -> float:
        """Quadrature weight prod(width_i / resolution_i), constant across cells."""
        return float(np.prod(self.spacing))

    def axis_nodes(self, axis: int) -> np.ndarray:
        """Midpoints lower + (k + 1/2) h along one axis."""
        h = self.spacing[axis]
        return self.lower[axis] + (np.arange(self.resolution[axis]) + 0.5) * h

    @cached_property
    def coords(self) -> List[np.ndarray]:
        """Full coordinate arrays of shape resolution, one per axis."""
        axes = [self.axis_nodes(i) for i in range(self.n)]
        return [np.ascontiguousarray(m) for m in np.meshgrid(*axes, indexing="ij")]

    def points(self) -> np.ndarray:
        """All nodes as an array of shape (size, n)."""
        return np.stack([c.ravel() for c in self.coords], axis=1)

    def crop_to_box(self, lower: Sequence[float], upper: Sequence[float]) -> Tuple["Grid", Tuple[slice, ...]]:
        """
        Cell-aligned sub-grid covering every cell that meets the open box (lower, upper).

        Returns:
            The sub-grid and the index window into this grid's value arrays

        Raises:
            DegenerateDomainError: If the box does not meet this grid's box
        """
        sub_lower, sub_upper, sub_res, window = [], [], [], []
        for i in range(self.n):
            lo, h, res = self.lower[i], self.spacing[i], self.resolution[i]
            b_lo, b_hi = float(lower[i]), float(upper[i])
            if b_hi <= self.lower[i] or b_lo >= self.upper[i]:
                raise DegenerateDomainError(
                    f"box [{b_lo}, {b_hi}] does not meet grid axis {i} [{self.lower[i]}, {self.upper[i]}]"
                )
            k_lo = max(0, math.floor((b_lo - lo) / h + _EDGE_GUARD))
            k_hi = min(res - 1, math.ceil((b_hi - lo) / h - _EDGE_GUARD) - 1)
            if k_hi < k_lo:
                raise DegenerateDomainError(f"box meets no cell along axis {i}")
            sub_lower.append(lo + k_lo * h)
            sub_upper.append(lo + (k_hi + 1) * h)
            sub_res.append(k_hi - k_lo + 1)
            window.append(slice(k_lo, k_hi + 1))
        return Grid(tuple(sub_lower), tuple(sub_upper), tuple(sub_res)), tuple(window)

    def window_of(self, other: "Grid") -> Optional[Tuple[slice, ...]]:
        """Index window if other is a cell-aligned sub-grid of this grid, else None."""
        if other.n != self.n:
            return None
        window = []
        for i in range(self.n):
            h, h_other = self.spacing[i], other.spacing[i]
            if abs(h - h_other) > _SPACING_TOL * h:
                return None
            offset = (other.lower[i] - self.lower[i]) / h
            k = round(offset)
            if abs(offset - k) > _ALIGN_TOL or k < 0 or k + other.resolution[i] > self.resolution[i]:
                return None
            window.append(slice(k, k + other.resolution[i]))
        return tuple(window)

    def same_as(self, other: "Grid") -> bool:
        """Same lattice up to floating-point noise in the bounds."""
        if self.resolution != other.resolution:
            return False
        window = self.window_of(other)
        return window is not None and all(s.start == 0 for s in window)

    def intersect_box(self, lower: Sequence[float], upper: Sequence[float]) -> Box:
        """Intersection of this grid's box with [lower, upper]."""
        lo = tuple(max(a, float(b)) for a, b in zip(self.lower, lower))
        hi = tuple(min(a, float(b)) for a, b in zip(self.upper, upper))
        if any(h <= l for l, h in zip(lo, hi)):
            raise DegenerateDomainError("boxes do not intersect")
        return lo, hi


@dataclass(frozen=True, eq=False)
class GridFunction:
    """A sampled real-valued function; values are read-only and finite."""

    grid: Grid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        """Validate size and finiteness, store an immutable copy."""
        values = np.array(self.values, dtype=float)
        if values.size != self.grid.size:
            raise InvalidInputError(
                f"expected {self.grid.size} values for resolution {self.grid.resolution}, got {values.size}"
            )
        values = values.reshape(self.grid.shape)
        if not np.all(np.isfinite(values)):
            raise InvalidInputError("grid function values must be finite")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @classmethod
    def constant(cls, grid: Grid, value: float = 1.0) -> "GridFunction":
        return cls(grid, np.full(grid.shape, float(value)))

    @property
    def n(self) -> int:
        return self.grid.n

    @property
    def box(self) -> Box:
        return self.grid.box

    @property
    def resolution(self) -> Tuple[int, ...]:
        return self.grid.resolution

    @property
    def cell_weight(self) -> float:
        return self.grid.cell_weight

    def with_values(self, values: np.ndarray) -> "GridFunction":
        return GridFunction(self.grid, values)

    def shifted(self, offset: Sequence[float]) -> "GridFunction":
        """Same values on the grid translated by offset (the function moves with it)."""
        grid = Grid(
            tuple(lo + z for lo, z in zip(self.grid.lower, offset)),
            tuple(hi + z for hi, z in zip(self.grid.upper, offset)),
            self.grid.resolution,
        )
        return GridFunction(grid, self.values)

    def _check_same_grid(self, other: "GridFunction") -> None:
        if not self.grid.same_as(other.grid):
            raise IncompatibleParametersError("grid functions live on different grids")

    def __add__(self, other: "GridFunction") -> "GridFunction":
        self._check_same_grid(other)
        return self.with_values(self.values + other.values)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        self._check_same_grid(other)
        return self.with_values(self.values - other.values)

    def __mul__(self, scalar: float) -> "GridFunction":
        return self.with_values(self.values * float(scalar))

    __rmul__ = __mul__
