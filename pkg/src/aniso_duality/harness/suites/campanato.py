"""Best polynomial approximation and the searched Campanato seminorm."""

import math
from typing import Callable, List

import numpy as np
from scipy.optimize import minimize_scalar

from ...campanato import ball_weight, best_poly_error, campanato_seminorm, q_monotonicity_check
from ...core import (
    AnisotropyVector,
    BallSearchDomain,
    CampanatoParams,
    ExponentVector,
    FamilyKind,
    FunctionFamily,
    HarnessConfig,
    PropertyName,
    SuiteName,
)
from ...grid import sample
from ...polyproj import build_basis, in_ball_values, project
from ..base import BaseSuite, CaseOutcome, PropertyBlock, from_check, outcome
from ..generators import (
    G_KINDS,
    random_anisotropy,
    random_ball,
    random_exponent,
    random_function,
    small_domain,
    suite_resolution,
    unit_box,
)


SCAN_POINTS = 2001
MONOTONICITY_PAIRS = ((1.0, 2.0), (2.0, math.inf), (1.5, 3.0), (1.0, math.inf))
BENCHMARK_VALUE = 0.25
CLASSICAL_RESOLUTION = (256, 256)


def scanned_minimum(objective: Callable[[float], float], y: np.ndarray) -> float:
    """
    Minimum of a convex objective over constants c in [min y, max y].

    A dense scan locates the minimizing cell; a bounded scalar search
    then resolves it below the scan spacing.
    """
    lo, hi = float(y.min()), float(y.max())
    if hi == lo:
        return objective(lo)
    candidates = np.linspace(lo, hi, SCAN_POINTS)
    values = np.array([objective(c) for c in candidates])
    k = int(np.argmin(values))
    left, right = candidates[max(k - 1, 0)], candidates[min(k + 1, SCAN_POINTS - 1)]
    result = minimize_scalar(objective, bounds=(left, right), method="bounded", options={"xatol": 1e-13 * (hi - lo)})
    return float(min(result.fun, values[k]))


def _draw(rng: np.random.Generator, n: int, kinds=G_KINDS):
    resolution = suite_resolution(n)
    g = random_function(rng, unit_box(n), resolution, kinds)
    ball = random_ball(rng, random_anisotropy(rng, n), g.box)
    return g, ball, resolution


def _q2_agreement(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 3))
    s = int(rng.integers(0, 4))
    g, ball, resolution = _draw(rng, n)
    basis = build_basis(ball, s, grid=g.grid)
    y = in_ball_values(g, basis)
    direct = float(np.sqrt(np.mean((y - basis.in_ball_values(project(g, basis))) ** 2)))
    solved = best_poly_error(g, ball, 2.0, s, basis=basis, config=config.solver).error
    scale = max(float(np.max(np.abs(y))), 1e-300)
    lhs = abs(solved - direct)
    return outcome(lhs, config.effective_tolerances().q2_agreement * scale, resolution=resolution, detail=f"s={s}")


def _constant_fit(rng: np.random.Generator, config: HarnessConfig, q: float) -> CaseOutcome:
    g, ball, resolution = _draw(rng, 1)
    basis = build_basis(ball, 0, grid=g.grid)
    y = in_ball_values(g, basis)
    solved = best_poly_error(g, ball, q, 0, basis=basis, config=config.solver)
    tolerances = config.effective_tolerances()
    if math.isinf(q):
        oracle = scanned_minimum(lambda c: float(np.max(np.abs(y - c))), y)
        tolerance = tolerances.minimax_agreement
    else:
        oracle = scanned_minimum(lambda c: float(np.mean(np.abs(y - c))), y)
        tolerance = tolerances.median_agreement
    scale = max(float(np.max(np.abs(y))), 1e-300)
    lhs = abs(solved.error - oracle)
    return outcome(lhs, tolerance * scale, resolution=resolution, detail=f"method={solved.method.value}")


def _minimax(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    return _constant_fit(rng, config, math.inf)


def _median(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    return _constant_fit(rng, config, 1.0)


def _random_params(rng: np.random.Generator, a: AnisotropyVector, q: float) -> CampanatoParams:
    p = random_exponent(rng, a.n, 0.5, 2.0)
    return CampanatoParams(a=a, p=p, q=q, s=int(rng.integers(0, 3)))


def _q_monotonicity(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n = int(rng.integers(1, 3))
    q1, q2 = MONOTONICITY_PAIRS[int(rng.integers(len(MONOTONICITY_PAIRS)))]
    resolution = suite_resolution(n)
    g = random_function(rng, unit_box(n), resolution)
    a = random_anisotropy(rng, n)
    params = _random_params(rng, a, q2)
    check = q_monotonicity_check(g, params, small_domain(g.box, a), q1, q2, config)
    return from_check(check, resolution)


def _benchmark(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """|x| on [-1, 1] with p = 1/2, q = inf, s = 1: every centered ball scores 1/4."""
    resolution = config.grid.resolution(1)
    box = unit_box(1)
    g = sample(FunctionFamily(kind=FamilyKind.RADIAL_POWER), box, resolution)
    a = AnisotropyVector.isotropic(1)
    params = CampanatoParams(a=a, p=ExponentVector.of(0.5), q=math.inf, s=1)
    domain = BallSearchDomain.lattice(*box, a, 0.05, 0.5, centers_per_axis=11, n_radii=6)
    result = campanato_seminorm(g, params, domain, config)
    tolerances = config.effective_tolerances()
    center = abs(result.witness.center[0])
    lhs = abs(result.value - BENCHMARK_VALUE)
    rhs = tolerances.benchmark_rel * BENCHMARK_VALUE
    passed = lhs <= rhs and center <= tolerances.benchmark_center
    return outcome(lhs, rhs, passed=passed, resolution=resolution, detail=f"value={result.value:.6g}, u={center:.3g}")


def _axiom_setup(rng: np.random.Generator, exponents=(2.0, math.inf)):
    n = int(rng.integers(1, 3))
    a = random_anisotropy(rng, n)
    q = exponents[int(rng.integers(len(exponents)))]
    return n, a, _random_params(rng, a, q)


def _homogeneity(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n, a, params = _axiom_setup(rng, exponents=(2.0,))
    resolution = suite_resolution(n)
    g = random_function(rng, unit_box(n), resolution, G_KINDS)
    alpha = float(10.0 ** rng.uniform(-2.0, 2.0))
    domain = small_domain(g.box, a)
    base = campanato_seminorm(g, params, domain, config).value
    scaled = campanato_seminorm(g * alpha, params, domain, config).value
    lhs = abs(scaled - alpha * base)
    rhs = config.effective_tolerances().homogeneity_rel * alpha * base
    return outcome(lhs, rhs, resolution=resolution, detail=f"alpha={alpha:.4g}")


def _triangle(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    n, a, params = _axiom_setup(rng)
    resolution = suite_resolution(n)
    g = random_function(rng, unit_box(n), resolution, G_KINDS)
    h = random_function(rng, unit_box(n), resolution, G_KINDS)
    domain = small_domain(g.box, a)
    lhs = campanato_seminorm(g + h, params, domain, config).value
    total = campanato_seminorm(g, params, domain, config).value + campanato_seminorm(h, params, domain, config).value
    return outcome(lhs, total * (1.0 + config.effective_tolerances().q_monotonicity), resolution=resolution)


def _vanishing(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """The seminorm of a polynomial of degree s is numerically zero."""
    n, a, params = _axiom_setup(rng)
    params = params.model_copy(update={"q": (1.0, 2.0, math.inf)[int(rng.integers(3))]})
    resolution = suite_resolution(n)
    family = FunctionFamily(
        kind=FamilyKind.RANDOM_POLYNOMIAL, params={"degree": params.s}, seed=int(rng.integers(2**32))
    )
    g = sample(family, unit_box(n), resolution)
    value = campanato_seminorm(g, params, small_domain(g.box, a), config).value
    scale = float(np.max(np.abs(g.values)))
    return outcome(value, config.effective_tolerances().projection_fix * scale, resolution=resolution)


def _classical_weight(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """a = (1, 1), p = (p, p): weight(B) = |B|^{1 - 1/p}."""
    p = float(rng.uniform(0.5, 3.0))
    resolution = CLASSICAL_RESOLUTION
    g = random_function(rng, unit_box(2), resolution)
    a = AnisotropyVector.isotropic(2)
    ball = random_ball(rng, a, g.box)
    params = CampanatoParams(a=a, p=ExponentVector.constant(p, 2), q=2.0, s=0)
    exact = ball.volume ** (1.0 - 1.0 / p)
    lhs = abs(ball_weight(g, ball, params) - exact)
    return outcome(lhs, config.effective_tolerances().grid * exact, resolution=resolution, detail=f"p={p:.4g}")


class CampanatoSuite(BaseSuite):
    """Inner best-approximation solvers and seminorm properties."""

    @property
    def name(self) -> SuiteName:
        return SuiteName.CAMPANATO

    def blocks(self, config: HarnessConfig) -> List[PropertyBlock]:
        counts = config.suites
        axioms = counts.seminorm_axioms
        return [
            PropertyBlock(PropertyName("q2_agreement"), "best_poly_error", counts.q2_agreement, _q2_agreement),
            PropertyBlock(PropertyName("minimax"), "best_poly_error", counts.minimax, _minimax),
            PropertyBlock(PropertyName("median"), "best_poly_error", counts.median, _median),
            PropertyBlock(PropertyName("q_monotonicity"), "q_monotonicity_check", counts.q_monotonicity, _q_monotonicity),
            PropertyBlock(PropertyName("abs_benchmark"), "campanato_seminorm", 1, _benchmark),
            PropertyBlock(PropertyName("homogeneity"), "campanato_seminorm", axioms, _homogeneity),
            PropertyBlock(PropertyName("triangle"), "campanato_seminorm", axioms, _triangle),
            PropertyBlock(PropertyName("vanishing"), "campanato_seminorm", axioms, _vanishing),
            PropertyBlock(PropertyName("classical_weight"), "ball_weight", axioms, _classical_weight),
        ]
