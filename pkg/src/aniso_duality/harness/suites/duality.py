"""The pairing bounds: single ball, atomic combinations, dual norm and sharpness."""

import math
from typing import List

import numpy as np

from ...campanato import best_poly_error, unnormalized_error
from ...core import (
    AnisotropicBall,
    AnisotropyVector,
    CampanatoParams,
    HarnessConfig,
    PropertyName,
    SuiteName,
    conjugate_exponent,
)
from ...duality import (
    dual_norm_on_ball,
    extremal_atom,
    functional_norm_bound,
    pairing,
    single_ball_bound,
)
from ...grid import Grid, GridFunction
from ...polyproj import build_basis
from ..base import BaseSuite, CaseOutcome, PropertyBlock, from_check, outcome
from ..generators import (
    CONTINUOUS_KINDS,
    random_anisotropy,
    random_atom,
    random_atom_params,
    random_ball,
    random_function,
    sign_atom,
    small_domain,
    suite_resolution,
    unit_box,
)
from .atoms import random_combination


DUAL_NORM_SAMPLES = 200
BENCHMARK_SAMPLES = 2000
EXTREMAL_R_CHOICES = (1.5, 2.0, 3.0, 4.0)
DUAL_R_CHOICES = (1.5, 2.0, 3.0, math.inf)


def _single_ball(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 3))
    resolution = suite_resolution(n)
    a = random_anisotropy(rng, n)
    params = random_atom_params(rng, a)
    f = random_function(rng, unit_box(n), resolution)
    g = random_function(rng, unit_box(n), resolution, CONTINUOUS_KINDS)
    atom = random_atom(rng, f, a, params, config.effective_tolerances())
    return from_check(single_ball_bound(atom, g, config), resolution)


def _sign_atom_pairing(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """sign(x)/2 against g(x) = x: both sides equal 1/2."""
    resolution = config.grid.resolution(1)
    tolerances = config.effective_tolerances()
    atom = sign_atom(resolution, tolerances)
    grid = Grid.over_box(unit_box(1), resolution)
    g = GridFunction(grid, grid.coords[0])
    check = single_ball_bound(atom, g, config)
    exact = abs(check.lhs - 0.5) <= tolerances.sign_atom and abs(check.rhs - 0.5) <= 0.5 * tolerances.single_ball
    return outcome(check.lhs, check.rhs, passed=check.passed and exact, resolution=resolution, detail=check.detail)


def _functional(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    c = random_combination(rng, config, size=int(rng.integers(1, 5)))
    n = c.n
    resolution = suite_resolution(n)
    g = random_function(rng, unit_box(n), resolution, CONTINUOUS_KINDS)
    first = c.atoms[0].params
    params = CampanatoParams(a=c.anisotropy, p=c.p, q=conjugate_exponent(first.r), s=first.s)
    domain = small_domain(g.box, c.anisotropy)
    check = functional_norm_bound(c, g, params, domain, config)
    return from_check(check, resolution)


def _dual_norm(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """The sampled dual norm never exceeds inf_P ||g - P||_{L^r'(B)}."""
    n = int(rng.integers(1, 3))
    resolution = suite_resolution(n)
    g = random_function(rng, unit_box(n), resolution, CONTINUOUS_KINDS)
    ball = random_ball(rng, random_anisotropy(rng, n), g.box)
    r = DUAL_R_CHOICES[int(rng.integers(len(DUAL_R_CHOICES)))]
    s = int(rng.integers(0, 3))
    sampled = dual_norm_on_ball(g, ball, r, s, DUAL_NORM_SAMPLES, seed=int(rng.integers(2**32)), config=config)
    bound = _best_error(g, ball, r, s, config)
    rhs = bound * (1.0 + config.effective_tolerances().dual_norm) + config.effective_tolerances().single_ball_abs
    return outcome(sampled, rhs, resolution=resolution, detail=f"r={r}, s={s}")


def _best_error(g: GridFunction, ball: AnisotropicBall, r: float, s: int, config: HarnessConfig) -> float:
    r_dual = conjugate_exponent(r)
    basis = build_basis(ball, s, grid=g.grid)
    approximation = best_poly_error(g, ball, r_dual, s, basis=basis, config=config.solver)
    return unnormalized_error(approximation, basis, r_dual)


def _dual_norm_benchmark(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """g(x) = x on [-1, 1], s = 0, r = 2: the dual norm approaches sqrt(2/3) from below."""
    resolution = config.grid.resolution(1)
    grid = Grid.over_box(unit_box(1), resolution)
    g = GridFunction(grid, grid.coords[0])
    ball = AnisotropicBall(center=(0.0,), radius=1.0, anisotropy=AnisotropyVector.isotropic(1))
    sampled = dual_norm_on_ball(g, ball, 2.0, 0, BENCHMARK_SAMPLES, seed=int(rng.integers(2**32)), config=config)
    tolerances = config.effective_tolerances()
    exact = math.sqrt(2.0 / 3.0)
    bound = _best_error(g, ball, 2.0, 0, config)
    lhs = abs(sampled - exact)
    rhs = tolerances.dual_norm_benchmark * exact
    passed = lhs <= rhs and sampled <= bound * (1.0 + tolerances.dual_norm)
    return outcome(lhs, rhs, passed=passed, resolution=resolution, detail=f"sampled={sampled:.6g}")


def _extremal(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 3))
    resolution = suite_resolution(n)
    a = random_anisotropy(rng, n)
    r = EXTREMAL_R_CHOICES[int(rng.integers(len(EXTREMAL_R_CHOICES)))]
    params = random_atom_params(rng, a, r=r)
    g = random_function(rng, unit_box(n), resolution)
    ball = random_ball(rng, a, g.box)
    result = extremal_atom(g, ball, params, config)
    rhs = 1.0 + config.effective_tolerances().single_ball
    return outcome(result.ratio, rhs, passed=result.sharp, resolution=resolution, detail=f"r={r}")


def _bilinearity(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 3))
    resolution = suite_resolution(n)
    f1, f2, g = (random_function(rng, unit_box(n), resolution, CONTINUOUS_KINDS) for _ in range(3))
    alpha, beta = (float(x) for x in rng.standard_normal(2))
    combined = pairing(f1 * alpha + f2 * beta, g)
    lhs = abs(combined - (alpha * pairing(f1, g) + beta * pairing(f2, g)))
    magnitude = GridFunction(g.grid, np.abs(g.values))
    scale = abs(alpha) * pairing(f1.with_values(np.abs(f1.values)), magnitude)
    scale += abs(beta) * pairing(f2.with_values(np.abs(f2.values)), magnitude)
    return outcome(lhs, config.effective_tolerances().isotropic_rel * scale, resolution=resolution)


class DualitySuite(BaseSuite):
    """Quantitative inequalities of the atom/Campanato pairing."""

    @property
    def name(self) -> SuiteName:
        return SuiteName.DUALITY

    def blocks(self, config: HarnessConfig) -> List[PropertyBlock]:
        counts = config.suites
        return [
            PropertyBlock(PropertyName("single_ball"), "single_ball_bound", counts.single_ball, _single_ball),
            PropertyBlock(PropertyName("sign_atom"), "single_ball_bound", 1, _sign_atom_pairing),
            PropertyBlock(PropertyName("functional"), "functional_norm_bound", counts.functional, _functional),
            PropertyBlock(PropertyName("dual_norm"), "dual_norm_on_ball", counts.dual_norm, _dual_norm),
            PropertyBlock(PropertyName("dual_norm_benchmark"), "dual_norm_on_ball", 1, _dual_norm_benchmark),
            PropertyBlock(PropertyName("extremal_atom"), "extremal_atom", counts.extremal, _extremal),
            PropertyBlock(PropertyName("bilinearity"), "pairing", counts.bilinearity, _bilinearity),
        ]
