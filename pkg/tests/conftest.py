"""Pytest fixtures for geometry, atom, Campanato and harness tests."""

import math
from typing import Sequence

import numpy as np
import pytest

from aniso_duality.core import (
    AnisotropicBall,
    AnisotropyVector,
    HarnessConfig,
)
from aniso_duality.core.config import SuiteCounts
from aniso_duality.grid import Grid, GridFunction
from aniso_duality.norms import clear_measure_cache
from aniso_duality.polyproj import clear_basis_cache


# Fixed master seed for deterministic tests
TEST_SEED = 20240115


@pytest.fixture(autouse=True)
def _fresh_caches():
    """
    Drop memoized ball measures and bases around every test.

    Tests must not depend on results cached by an earlier test.
    """
    clear_measure_cache()
    clear_basis_cache()
    yield
    clear_measure_cache()
    clear_basis_cache()


@pytest.fixture
def rng():
    """Seeded generator; every test draws the same stream."""
    return np.random.default_rng(TEST_SEED)


@pytest.fixture
def small_config():
    """Harness config with a handful of cases per property and a single worker."""
    return make_small_config()


def make_small_config(count: int = 2, **overrides) -> HarnessConfig:
    """
    Helper to build a HarnessConfig whose suites run in seconds.

    Args:
        count: Case count used for every property
        **overrides: Top-level HarnessConfig fields to replace

    Returns:
        HarnessConfig with every SuiteCounts field set to count
    """
    counts = SuiteCounts(**{name: count for name in SuiteCounts.model_fields})
    config = HarnessConfig(suites=counts, workers=1)
    return config.with_overrides(**overrides)


def interval_function(fn, lower: float = -1.0, upper: float = 1.0, resolution: int = 1024) -> GridFunction:
    """fn sampled on the midpoint lattice of [lower, upper]."""
    grid = Grid((lower,), (upper,), (resolution,))
    return GridFunction(grid, fn(grid.coords[0]))


def box_function(fn, lower: Sequence[float], upper: Sequence[float], resolution: Sequence[int]) -> GridFunction:
    """fn(*coords) sampled on the midpoint lattice of the box."""
    grid = Grid(tuple(lower), tuple(upper), tuple(resolution))
    return GridFunction(grid, fn(*grid.coords))


def make_ball(center: Sequence[float], radius: float, a: Sequence[float] = None) -> AnisotropicBall:
    """
    Helper to build an AnisotropicBall.

    Args:
        center: Ball center
        radius: Quasi-metric radius
        a: Anisotropy exponents (isotropic when None)
    """
    anisotropy = AnisotropyVector.isotropic(len(center)) if a is None else AnisotropyVector(a=tuple(a))
    return AnisotropicBall(center=tuple(float(c) for c in center), radius=radius, anisotropy=anisotropy)


SQRT_TWO_THIRDS = math.sqrt(2.0 / 3.0)
