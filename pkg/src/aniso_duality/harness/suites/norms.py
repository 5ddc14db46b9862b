"""Mixed-norm Lebesgue quasi-norms against closed forms and direct quadrature."""

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
from ...norms import (
    indicator_mixed_norm,
    lp_norm,
    mixed_lebesgue_norm,
    rectangle_closed_form,
    rectangle_mixed_norm,
)
from ..base import BaseSuite, CaseOutcome, PropertyBlock, outcome
from ..generators import random_exponent, random_function, suite_resolution, unit_box


RECTANGLE_RESOLUTION = {1: 64, 2: 16, 3: 8}
INDICATOR_RESOLUTION = (256, 256)


def _rectangle(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 4))
    lower = tuple(float(x) for x in rng.uniform(-1.0, 0.0, n))
    upper = tuple(lo + float(w) for lo, w in zip(lower, rng.uniform(0.2, 2.0, n)))
    p = random_exponent(rng, n, 0.3, 4.0, inf_probability=0.2)
    resolution = (RECTANGLE_RESOLUTION[n],) * n
    exact = rectangle_closed_form(lower, upper, p)
    lhs = abs(rectangle_mixed_norm(lower, upper, p, resolution) - exact)
    rhs = config.effective_tolerances().rectangle_rel * exact
    return outcome(lhs, rhs, resolution=resolution, detail=f"p={p.p}")


def _isotropic(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 4))
    resolution = suite_resolution(n)
    f = random_function(rng, unit_box(n), resolution)
    p = float(rng.uniform(0.3, 4.0))
    classical = lp_norm(f, p)
    lhs = abs(mixed_lebesgue_norm(f, ExponentVector.constant(p, n)) - classical)
    rhs = config.effective_tolerances().isotropic_rel * classical
    return outcome(lhs, rhs, resolution=resolution, detail=f"p={p:.4g}")


def _axis_infinity(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 4))
    resolution = suite_resolution(n)
    f = random_function(rng, unit_box(n), resolution)
    peak = float(np.max(np.abs(f.values)))
    lhs = abs(mixed_lebesgue_norm(f, ExponentVector.constant(math.inf, n)) - peak)
    return outcome(lhs, config.effective_tolerances().isotropic_rel * peak, resolution=resolution)


def _scaling(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 4))
    resolution = suite_resolution(n)
    f = random_function(rng, unit_box(n), resolution)
    p = random_exponent(rng, n, 0.3, 4.0, inf_probability=0.2)
    alpha = float(rng.uniform(-5.0, 5.0))
    base = mixed_lebesgue_norm(f, p)
    lhs = abs(mixed_lebesgue_norm(f * alpha, p) - abs(alpha) * base)
    rhs = config.effective_tolerances().homogeneity_rel * abs(alpha) * base
    return outcome(lhs, rhs, resolution=resolution, detail=f"alpha={alpha:.4g}")


def _monotonicity(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """|f| <= |g| pointwise gives ||f|| <= ||g||."""
    n = int(rng.integers(1, 4))
    resolution = suite_resolution(n)
    g = random_function(rng, unit_box(n), resolution)
    f = g.with_values(g.values * rng.uniform(0.0, 1.0, g.values.shape))
    p = random_exponent(rng, n, 0.3, 4.0, inf_probability=0.2)
    lhs = mixed_lebesgue_norm(f, p)
    rhs = mixed_lebesgue_norm(g, p) * (1.0 + config.effective_tolerances().isotropic_rel)
    return outcome(lhs, rhs, resolution=resolution)


def _indicator_isotropic(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """||chi_B||_{L^(p,p)} = |B|^{1/p} for Euclidean discs."""
    p = float(rng.uniform(0.5, 3.0))
    radius = float(rng.uniform(0.3, 1.0))
    ball = AnisotropicBall(center=(0.0, 0.0), radius=radius, anisotropy=AnisotropyVector.isotropic(2))
    exact = (math.pi * radius * radius) ** (1.0 / p)
    measured = indicator_mixed_norm(ball, ExponentVector.constant(p, 2), INDICATOR_RESOLUTION)
    lhs = abs(measured - exact)
    rhs = config.effective_tolerances().volume_rel * exact
    return outcome(lhs, rhs, resolution=INDICATOR_RESOLUTION, detail=f"p={p:.4g}, r={radius:.4g}")


class NormsSuite(BaseSuite):
    """Mixed-norm quasi-norms of sampled functions and indicators."""

    @property
    def name(self) -> SuiteName:
        return SuiteName.NORMS

    def blocks(self, config: HarnessConfig) -> List[PropertyBlock]:
        counts = config.suites
        return [
            PropertyBlock(PropertyName("rectangle"), "mixed_lebesgue_norm", counts.rectangle, _rectangle),
            PropertyBlock(PropertyName("isotropic_collapse"), "mixed_lebesgue_norm", counts.isotropic, _isotropic),
            PropertyBlock(PropertyName("axis_infinity"), "mixed_lebesgue_norm", counts.axis_infinity, _axis_infinity),
            PropertyBlock(PropertyName("scaling"), "mixed_lebesgue_norm", counts.axis_infinity, _scaling),
            PropertyBlock(PropertyName("monotonicity"), "mixed_lebesgue_norm", counts.axis_infinity, _monotonicity),
            PropertyBlock(
                PropertyName("indicator_isotropic"), "indicator_mixed_norm", counts.ball_volume, _indicator_isotropic
            ),
        ]
