"""Midpoint lattices, seeded function families and quadrature."""

from .csv_io import load_grid_csv, write_grid_csv
from .families import BaseFamily
from .lattice import Box, Grid, GridFunction
from .operations import (
    ball_grid_mask,
    indicator,
    integrate,
    restrict_to_ball,
    sample,
    transfer,
)
from .registry import (
    clear_registry_for_tests,
    get_families,
    get_family,
    register_default_families,
    register_family,
)

__all__ = [
    "Box",
    "Grid",
    "GridFunction",
    "BaseFamily",
    "sample",
    "integrate",
    "indicator",
    "ball_grid_mask",
    "transfer",
    "restrict_to_ball",
    "load_grid_csv",
    "write_grid_csv",
    "register_family",
    "get_family",
    "get_families",
    "clear_registry_for_tests",
    "register_default_families",
]
