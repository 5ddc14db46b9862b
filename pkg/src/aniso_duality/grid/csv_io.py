"""CSV import/export of sampled grid functions.

Layout: the first line is the header ``n,res_1,...,res_n,lo_1,hi_1,...,lo_n,hi_n``;
every following field is a value, in row-major order (last axis fastest).
"""

import csv
import math
from pathlib import Path
from typing import List, Union

import numpy as np

from ..core import GridFormatError
from .lattice import Grid, GridFunction


def _parse_header(fields: List[str], path: Path) -> Grid:
    try:
        n = int(float(fields[0]))
    except (IndexError, ValueError) as exc:
        raise GridFormatError(f"{path}: header must start with the dimension") from exc
    if not 1 <= n <= 3:
        raise GridFormatError(f"{path}: dimension must be 1-3, got {n}")
    if len(fields) != 1 + 3 * n:
        raise GridFormatError(f"{path}: header needs {1 + 3 * n} fields for n={n}, got {len(fields)}")
    try:
        resolution = tuple(int(fields[1 + i]) for i in range(n))
        bounds = [float(v) for v in fields[1 + n:]]
    except ValueError as exc:
        raise GridFormatError(f"{path}: malformed header {fields}") from exc
    if any(res < 2 for res in resolution):
        raise GridFormatError(f"{path}: every resolution must be >= 2, got {resolution}")
    lower = tuple(bounds[0::2])
    upper = tuple(bounds[1::2])
    if any(not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo for lo, hi in zip(lower, upper)):
        raise GridFormatError(f"{path}: box bounds must be finite with lo < hi")
    return Grid(lower, upper, resolution)


def load_grid_csv(path: Union[str, Path]) -> GridFunction:
    """
    Read a grid function written in the layout above.

    Raises:
        GridFormatError: On a malformed header, a value count that does not
            match the resolution, or non-finite values
    """
    path = Path(path)
    try:
        with path.open(newline="") as handle:
            rows = [row for row in csv.reader(handle) if any(cell.strip() for cell in row)]
    except OSError as exc:
        raise GridFormatError(f"cannot read {path}: {exc}") from exc
    if not rows:
        raise GridFormatError(f"{path}: empty file")

    grid = _parse_header([cell.strip() for cell in rows[0]], path)
    cells = [cell.strip() for row in rows[1:] for cell in row if cell.strip()]
    if len(cells) != grid.size:
        raise GridFormatError(
            f"{path}: expected {grid.size} values for resolution {grid.resolution}, got {len(cells)}"
        )
    try:
        values = np.array([float(cell) for cell in cells])
    except ValueError as exc:
        raise GridFormatError(f"{path}: non-numeric value") from exc
    if not np.all(np.isfinite(values)):
        raise GridFormatError(f"{path}: values must be finite")
    return GridFunction(grid, values.reshape(grid.shape))


def write_grid_csv(f: GridFunction, path: Union[str, Path]) -> Path:
    """Write f in the layout read by load_grid_csv; one row per last-axis line."""
    path = Path(path)
    grid = f.grid
    header = [str(grid.n)] + [str(res) for res in grid.resolution]
    for lo, hi in zip(grid.lower, grid.upper):
        header += [repr(lo), repr(hi)]
    rows = f.values.reshape(-1, grid.resolution[-1])
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        for row in rows:
            writer.writerow([repr(float(v)) for v in row])
    return path
