"""The natural projection: reproduction, moments, covariance and the sup bound."""

from typing import List, Tuple

import numpy as np

from ...atoms import moment_residual
from ...core import (
    AnisotropicBall,
    AnisotropyVector,
    HarnessConfig,
    PropertyName,
    SuiteName,
)
from ...grid import GridFunction
from ...norms import bounding_grid
from ...polyproj import (
    build_basis,
    calibrate_projection_constant,
    in_ball_values,
    project,
    project_values,
    projection_bound_ratio,
)
from ..base import BaseSuite, CaseOutcome, PropertyBlock, outcome
from ..generators import (
    dilated_copy,
    polynomial_function,
    random_anisotropy,
    random_ball,
    random_function,
    random_polynomial,
    suite_resolution,
    unit_box,
)


CALIBRATION_SAMPLES = 40


def _setup(rng: np.random.Generator, s_max: int = 3) -> Tuple[AnisotropicBall, int, Tuple[int, ...]]:
    n = int(rng.integers(1, 3))
    s = int(rng.integers(0, s_max + 1))
    ball = random_ball(rng, random_anisotropy(rng, n), unit_box(n))
    return ball, s, suite_resolution(n)


def _fixes_polynomials(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    ball, s, resolution = _setup(rng)
    grid = bounding_grid(ball, resolution)
    poly = random_polynomial(rng, ball, s)
    recovered = project(polynomial_function(poly, grid), build_basis(ball, s, grid=grid))
    lhs = float(np.max(np.abs(recovered.coefficients - poly.coefficients)))
    rhs = config.effective_tolerances().projection_fix * max(1.0, float(np.max(np.abs(poly.coefficients))))
    return outcome(lhs, rhs, resolution=resolution, detail=f"n={ball.n}, s={s}")


def _moment_annihilation(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    ball, s, resolution = _setup(rng)
    f = random_function(rng, ball.bounding_box, resolution)
    basis = build_basis(ball, s, grid=f.grid)
    values = in_ball_values(f, basis)
    residual = np.zeros(basis.grid.shape)
    residual[basis.mask] = values - basis.design @ project_values(values, basis)
    lhs = moment_residual(GridFunction(basis.grid, residual), ball, s)
    return outcome(lhs, config.effective_tolerances().moment, resolution=resolution, detail=f"s={s}")


def _moved(rng: np.random.Generator, f: GridFunction, ball: AnisotropicBall):
    offset = tuple(float(z) for z in rng.uniform(-3.0, 3.0, ball.n))
    factor = float(rng.uniform(0.5, 2.0))
    return dilated_copy(f, ball, offset, factor)


def _covariance(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """Pi commutes with translations and anisotropic dilations in ball coordinates."""
    ball, s, resolution = _setup(rng)
    f = random_function(rng, ball.bounding_box, resolution)
    g, moved = _moved(rng, f, ball)
    original = project(f, build_basis(ball, s, grid=f.grid)).coefficients
    image = project(g, build_basis(moved, s, grid=g.grid)).coefficients
    lhs = float(np.max(np.abs(original - image)))
    rhs = config.effective_tolerances().covariance * max(1.0, float(np.max(np.abs(original))))
    return outcome(lhs, rhs, resolution=resolution)


def _ratio_dilation(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    ball, s, resolution = _setup(rng)
    f = random_function(rng, ball.bounding_box, resolution)
    g, moved = _moved(rng, f, ball)
    ratio = projection_bound_ratio(f, ball, s)
    lhs = abs(projection_bound_ratio(g, moved, s) - ratio)
    return outcome(lhs, config.effective_tolerances().covariance * ratio, resolution=resolution)


def _constant_ratio(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """For s = 0 the projection is the mean, so sup |Pi f| <= mean |f|."""
    ball = random_ball(rng, AnisotropyVector.isotropic(1), unit_box(1))
    resolution = suite_resolution(1)
    f = random_function(rng, ball.bounding_box, resolution)
    lhs = projection_bound_ratio(f, ball, 0)
    return outcome(lhs, 1.0 + config.effective_tolerances().projection_fix, resolution=resolution)


def _projection_constant(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """
    The calibrated constant never exceeds |B| max_y K(y, y).

    K is the reproducing kernel sum_j q_j(y)^2; Cauchy-Schwarz bounds
    |K(y, z)| by its diagonal, which bounds every observed ratio.
    """
    n = int(rng.integers(1, 3))
    s = int(rng.integers(0, 3))
    resolution = suite_resolution(n)
    calibration = calibrate_projection_constant(
        n, s, samples=CALIBRATION_SAMPLES, seed=int(rng.integers(2**32)), resolution=resolution
    )
    ball = AnisotropicBall(center=(0.0,) * n, radius=1.0, anisotropy=AnisotropyVector.isotropic(n))
    basis = build_basis(ball, s, grid=bounding_grid(ball, resolution))
    diagonal = float(np.max(np.sum(basis.orthonormal_values ** 2, axis=1)))
    rhs = basis.volume * diagonal * (1.0 + config.effective_tolerances().projection_fix)
    return outcome(
        calibration.constant,
        rhs,
        resolution=resolution,
        detail=f"n={n}, s={s}, mean={calibration.mean_ratio:.4g}",
    )


class ProjectionSuite(BaseSuite):
    """Orthonormal bases on balls and the projection onto P_s."""

    @property
    def name(self) -> SuiteName:
        return SuiteName.PROJECTION

    def blocks(self, config: HarnessConfig) -> List[PropertyBlock]:
        count = config.suites.projection
        return [
            PropertyBlock(PropertyName("fixes_polynomials"), "project", count, _fixes_polynomials),
            PropertyBlock(PropertyName("moment_annihilation"), "project", count, _moment_annihilation),
            PropertyBlock(PropertyName("covariance"), "project", count, _covariance),
            PropertyBlock(PropertyName("ratio_dilation"), "projection_bound_ratio", count, _ratio_dilation),
            PropertyBlock(PropertyName("constant_ratio"), "projection_bound_ratio", count, _constant_ratio),
            PropertyBlock(
                PropertyName("projection_constant"),
                "calibrate_projection_constant",
                config.suites.projection_constant,
                _projection_constant,
            ),
        ]
