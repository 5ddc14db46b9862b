"""Quasi-norm laws, the bracket, ball scaling and ball volume."""

import math
from typing import List

import numpy as np

from ...core import (
    AnisotropicBall,
    AnisotropyVector,
    ExponentVector,
    HarnessConfig,
    PropertyName,
    SuiteName,
)
from ...geometry import ball_mask, ball_membership, bracket, dilate, quasi_norm, unit_ball
from ...norms import ball_measures, bounding_grid
from ..base import BaseSuite, CaseOutcome, PropertyBlock, outcome
from ..generators import random_anisotropy


VOLUME_RESOLUTION = (256, 256)


def _random_point(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal(n) * 10.0 ** rng.uniform(-2.0, 2.0)


def _homogeneity(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 4))
    a = random_anisotropy(rng, n, a_max=3.0)
    x = _random_point(rng, n)
    t = 10.0 ** rng.uniform(-2.0, 2.0)
    base = quasi_norm(a, x)
    lhs = abs(quasi_norm(a, dilate(a, t, x)) - t * base)
    rhs = config.effective_tolerances().homogeneity_rel * t * base
    return outcome(lhs, rhs, detail=f"n={n}, t={t:.4g}")


def _triangle(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 4))
    a = random_anisotropy(rng, n, a_max=3.0)
    x, y = _random_point(rng, n), _random_point(rng, n)
    lhs = quasi_norm(a, x + y)
    rhs = quasi_norm(a, x) + quasi_norm(a, y) + config.effective_tolerances().triangle_abs
    return outcome(lhs, rhs, detail=f"n={n}")


def _euclidean(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 4))
    x = _random_point(rng, n)
    euclidean = float(np.linalg.norm(x))
    lhs = abs(quasi_norm(AnisotropyVector.isotropic(n), x) - euclidean)
    return outcome(lhs, config.effective_tolerances().euclidean_rel * euclidean, detail=f"n={n}")


def _bracket(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """max(1, |x|_a) <= <x>_a <= 1 + |x|_a."""
    n = int(rng.integers(1, 4))
    a = random_anisotropy(rng, n, a_max=3.0)
    x = _random_point(rng, n)
    tol = config.effective_tolerances().homogeneity_rel
    norm = quasi_norm(a, x)
    value = bracket(a, x)
    lower = max(1.0, norm)
    upper = (1.0 + norm) * (1.0 + tol)
    passed = lower <= value * (1.0 + tol) and value <= upper
    return outcome(value, upper, passed=passed, detail=f"lower={lower:.12g}")


def _ball_scaling(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """y in B(x, r) iff r^{-a}(y - x) in B(0, 1), and the ellipsoid mask agrees."""
    n = int(rng.integers(1, 4))
    a = random_anisotropy(rng, n, a_max=3.0)
    center = tuple(float(c) for c in rng.uniform(-1.0, 1.0, n))
    radius = float(10.0 ** rng.uniform(-1.0, 0.5))
    ball = AnisotropicBall(center=center, radius=radius, anisotropy=a)
    offset = rng.standard_normal(n) * 0.7 * np.asarray(ball.half_widths)
    y = tuple(c + d for c, d in zip(center, offset))

    # points this close to the sphere are decided by rounding alone
    if abs(quasi_norm(a, offset) / radius - 1.0) < 1e-9:
        return outcome(0.0, 0.0, detail="boundary point skipped")

    direct = ball_membership(ball, y)
    scaled = ball_membership(unit_ball(a), dilate(a, 1.0 / radius, offset))
    masked = bool(ball_mask(ball, [np.array([yi]) for yi in y])[0])
    mismatches = int(direct != scaled) + int(direct != masked)
    return outcome(float(mismatches), 0.0, detail=f"inside={direct}")


def _ball_volume(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    a = random_anisotropy(rng, 2)
    radius = float(rng.uniform(0.3, 1.5))
    ball = AnisotropicBall(center=(0.0, 0.0), radius=radius, anisotropy=a)
    grid = bounding_grid(ball, VOLUME_RESOLUTION)
    measured = ball_measures(ball, ExponentVector.constant(1.0, 2), grid).volume
    exact = ball.volume
    lhs = abs(measured - exact)
    rhs = config.effective_tolerances().volume_rel * exact
    return outcome(lhs, rhs, resolution=VOLUME_RESOLUTION, detail=f"nu={a.nu:.4g}, r={radius:.4g}")


class GeometrySuite(BaseSuite):
    """Anisotropic quasi-norm and ball geometry."""

    @property
    def name(self) -> SuiteName:
        return SuiteName.GEOMETRY

    def blocks(self, config: HarnessConfig) -> List[PropertyBlock]:
        counts = config.suites
        per_law = math.ceil(counts.quasi_norm_laws / 3)
        return [
            PropertyBlock(PropertyName("homogeneity"), "quasi_norm", per_law, _homogeneity),
            PropertyBlock(PropertyName("triangle"), "quasi_norm", per_law, _triangle),
            PropertyBlock(PropertyName("euclidean_collapse"), "quasi_norm", per_law, _euclidean),
            PropertyBlock(PropertyName("bracket"), "bracket", counts.bracket, _bracket),
            PropertyBlock(PropertyName("ball_scaling"), "ball_membership", counts.ball_scaling, _ball_scaling),
            PropertyBlock(PropertyName("ball_volume"), "ball_volume", counts.ball_volume, _ball_volume),
        ]
