"""Tests for best polynomial approximation and the Campanato seminorm search."""

import math

import numpy as np
import pytest

from aniso_duality.campanato import (
    BallSearch,
    ball_weight,
    best_poly_error,
    campanato_seminorm,
    q_monotonicity_check,
    score_ball,
    unnormalized_error,
)
from aniso_duality.core import (
    AnisotropyVector,
    BallScore,
    BallSearchDomain,
    CampanatoParams,
    ConvergenceError,
    DegenerateInputError,
    DomainError,
    ExponentVector,
    FamilyKind,
    FunctionFamily,
    InvalidInputError,
    SearchError,
    SolverMethod,
)
from aniso_duality.core.config import SearchConfig, SolverConfig
from aniso_duality.grid import sample
from aniso_duality.polyproj import build_basis, in_ball_values
from tests.conftest import box_function, interval_function, make_ball, make_small_config


def _params(n=1, p=1.0, q=2.0, s=0, a=None):
    anisotropy = AnisotropyVector.isotropic(n) if a is None else AnisotropyVector(a=tuple(a))
    return CampanatoParams(a=anisotropy, p=ExponentVector.constant(p, n), q=q, s=s)


class TestBestPolyError:
    """Inner best-approximation solvers."""

    def test_q_below_one_rejected(self):
        """q must lie in [1, inf]."""
        g = interval_function(np.cos, resolution=64)
        with pytest.raises(InvalidInputError):
            best_poly_error(g, make_ball((0.0,), 0.5), 0.5, 0)

    def test_q2_is_projection_residual(self):
        """q = 2 is the RMS of g - Pi_B g over in-ball nodes."""
        g = interval_function(lambda x: np.exp(x) + np.sin(5 * x), resolution=512)
        ball = make_ball((0.1,), 0.6)
        basis = build_basis(ball, 2, grid=g.grid)
        result = best_poly_error(g, ball, 2.0, 2, basis=basis)
        y = in_ball_values(g, basis)
        residual = y - basis.in_ball_values(result.polynomial)
        assert result.method == SolverMethod.PROJECTION
        assert result.error == pytest.approx(math.sqrt(float(np.mean(residual ** 2))), rel=1e-10)

    def test_minimax_constant(self):
        """The best constant for x on a symmetric node set has error max |x|."""
        g = interval_function(lambda x: x, resolution=200)
        ball = make_ball((0.0,), 0.5)
        basis = build_basis(ball, 0, grid=g.grid)
        y = in_ball_values(g, basis)
        result = best_poly_error(g, ball, math.inf, 0, basis=basis)
        assert result.error == pytest.approx(float(np.abs(y).max()), rel=1e-6)

    def test_minimax_line_for_square(self):
        """x^2 on a symmetric set: best line is a constant, error half the range."""
        g = interval_function(lambda x: x ** 2, resolution=200)
        ball = make_ball((0.0,), 0.8)
        basis = build_basis(ball, 1, grid=g.grid)
        y = in_ball_values(g, basis)
        result = best_poly_error(g, ball, math.inf, 1, basis=basis)
        assert result.error == pytest.approx(0.5 * float(y.max() - y.min()), rel=1e-6)

    def test_median_for_q1(self):
        """q = 1, s = 0: best constant for x on (0, 1) is the median, error 1/4."""
        g = interval_function(lambda x: x, 0.0, 1.0, 1000)
        result = best_poly_error(g, make_ball((0.5,), 0.5), 1.0, 0)
        assert result.error == pytest.approx(0.25, abs=1e-3)
        assert result.polynomial((0.5,)) == pytest.approx(0.5, abs=1e-2)

    def test_errors_increase_with_q(self):
        """Normalized best errors are monotone in q."""
        g = interval_function(lambda x: np.abs(x) ** 0.5 + x, resolution=400)
        ball = make_ball((0.0,), 0.9)
        basis = build_basis(ball, 1, grid=g.grid)
        errors = [best_poly_error(g, ball, q, 1, basis=basis).error for q in (1.0, 1.5, 2.0, math.inf)]
        for lower, upper in zip(errors, errors[1:]):
            assert lower <= upper * (1.0 + 1e-6)

    def test_iteration_cap_raises_for_general_q(self):
        """IRLS stopped at its cap raises ConvergenceError with diagnostics for q outside {1, 2, inf}."""
        g = interval_function(lambda x: np.sin(3.0 * x) + x ** 2, resolution=256)
        config = SolverConfig(max_iterations=1, objective_tol=1e-300)
        with pytest.raises(ConvergenceError) as exc:
            best_poly_error(g, make_ball((0.0,), 0.8), 3.0, 1, config=config)
        assert exc.value.diagnostics["q"] == 3.0
        assert exc.value.diagnostics["iterations"] == 1

    def test_iteration_cap_polishes_q1(self):
        """q = 1 at the cap is finished by the linear program instead of raising."""
        g = interval_function(lambda x: np.sin(3.0 * x) + x ** 2, resolution=256)
        config = SolverConfig(max_iterations=1, objective_tol=1e-300)
        result = best_poly_error(g, make_ball((0.0,), 0.8), 1.0, 1, config=config)
        assert result.converged
        assert result.error <= best_poly_error(g, make_ball((0.0,), 0.8), 2.0, 1).error

    def test_polynomial_has_zero_error(self):
        """g in P_s is reproduced exactly."""
        g = box_function(lambda x, y: 1.0 + x - 2.0 * y, (-1.0, -1.0), (1.0, 1.0), (64, 64))
        ball = make_ball((0.0, 0.0), 0.5)
        for q in (1.0, 2.0, 3.0, math.inf):
            assert best_poly_error(g, ball, q, 1).error == pytest.approx(0.0, abs=1e-8)

    def test_unnormalized_error(self):
        """||g - P||_{L^q(B)} is the normalized error times |B|^{1/q}."""
        g = interval_function(np.sin, resolution=256)
        ball = make_ball((0.0,), 0.5)
        basis = build_basis(ball, 0, grid=g.grid)
        result = best_poly_error(g, ball, 2.0, 0, basis=basis)
        assert unnormalized_error(result, basis, 2.0) == pytest.approx(result.error * math.sqrt(basis.volume))
        assert unnormalized_error(result, basis, math.inf) == result.error


class TestBallScores:
    """Ball weights and scores."""

    def test_classical_weight(self):
        """Constant p gives weight |B|^{1 - 1/p}."""
        g = box_function(lambda x, y: x, (-1.0, -1.0), (1.0, 1.0), (128, 128))
        ball = make_ball((0.0, 0.0), 0.5)
        weight = ball_weight(g, ball, _params(n=2, p=0.5))
        volume = ball_weight(g, ball, _params(n=2, p=math.inf))
        assert weight == pytest.approx(volume ** (1.0 - 2.0), rel=1e-12)

    def test_score_is_weight_times_error(self):
        """BallScore.score = weight * error."""
        g = interval_function(np.cos, resolution=256)
        ball = make_ball((0.2,), 0.4)
        params = _params(p=0.8, q=2.0, s=1)
        score = score_ball(g, ball, params)
        expected = ball_weight(g, ball, params) * best_poly_error(g, ball, 2.0, 1).error
        assert score.score == pytest.approx(expected, rel=1e-12)


class TestCampanatoSeminorm:
    """Searched seminorm values."""

    def test_abs_benchmark(self):
        """|x| with p = 1/2, q = inf, s = 1 peaks at 1/4 on centered balls."""
        g = sample(FunctionFamily(kind=FamilyKind.RADIAL_POWER), ((-1.0,), (1.0,)), (1024,))
        a = AnisotropyVector.isotropic(1)
        params = CampanatoParams(a=a, p=ExponentVector.of(0.5), q=math.inf, s=1)
        domain = BallSearchDomain.lattice((-1.0,), (1.0,), a, 0.05, 0.5, centers_per_axis=11, n_radii=6)
        result = campanato_seminorm(g, params, domain, make_small_config())
        assert result.value == pytest.approx(0.25, rel=0.02)
        assert abs(result.witness.center[0]) <= 0.02
        assert result.balls_evaluated == 66
        assert result.failures == 0

    def test_polynomial_vanishes(self):
        """A polynomial of degree s has seminorm numerically zero."""
        g = box_function(lambda x, y: 3.0 - x + x * y, (-1.0, -1.0), (1.0, 1.0), (64, 64))
        a = AnisotropyVector.of(1, 1.5)
        domain = BallSearchDomain.lattice((-1.0, -1.0), (1.0, 1.0), a, 0.3, 0.6, centers_per_axis=2, n_radii=2)
        result = campanato_seminorm(g, _params(n=2, p=0.9, q=2.0, s=2, a=(1, 1.5)), domain, make_small_config())
        assert result.value == pytest.approx(0.0, abs=1e-8)

    def test_homogeneity(self):
        """value(alpha g) = alpha value(g) on a fixed ball set."""
        g = interval_function(lambda x: np.sin(4 * x), resolution=512)
        a = AnisotropyVector.isotropic(1)
        domain = BallSearchDomain.lattice((-1.0,), (1.0,), a, 0.2, 0.6, centers_per_axis=3, n_radii=2)
        params = _params(p=0.7, q=2.0, s=0)
        config = make_small_config()
        base = campanato_seminorm(g, params, domain, config).value
        assert campanato_seminorm(g * 3.0, params, domain, config).value == pytest.approx(3.0 * base, rel=1e-9)

    def test_ball_outside_box(self):
        """Every searched ball must fit in g's box."""
        g = interval_function(np.cos, resolution=128)
        a = AnisotropyVector.isotropic(1)
        domain = BallSearchDomain.lattice((-1.0,), (1.0,), a, 0.1, 0.2, centers_per_axis=2, n_radii=1)
        domain = domain.with_balls([make_ball((0.9,), 0.5)])
        with pytest.raises(DomainError):
            campanato_seminorm(g, _params(), domain, make_small_config())

    def test_refinement_never_lowers_value(self):
        """Refinement only accepts strict improvements over the lattice maximum."""
        g = interval_function(lambda x: np.cos(3 * x) + x ** 3, resolution=256)
        a = AnisotropyVector.isotropic(1)
        coarse = BallSearchDomain.lattice((-1.0,), (1.0,), a, 0.1, 0.5, centers_per_axis=3, n_radii=3)
        refined = coarse.model_copy(update={"refinement_rounds": 1})
        params = _params(p=0.8, q=2.0, s=1)
        config = make_small_config()
        assert campanato_seminorm(g, params, refined, config).value >= campanato_seminorm(g, params, coarse, config).value

    def test_q_monotonicity(self):
        """The q = 1 value stays below the q = inf value on shared balls."""
        g = box_function(lambda x, y: np.sin(3 * x) * np.cos(2 * y), (-1.0, -1.0), (1.0, 1.0), (48, 48))
        a = AnisotropyVector.of(1, 1.5)
        domain = BallSearchDomain.lattice((-1.0, -1.0), (1.0, 1.0), a, 0.4, 0.6, centers_per_axis=2, n_radii=2)
        check = q_monotonicity_check(g, _params(n=2, p=0.9, s=1, a=(1, 1.5)), domain, 1.0, math.inf, make_small_config())
        assert check.passed
        assert check.lhs <= check.rhs * (1.0 + 1e-6)

    def test_q_monotonicity_searches_q1_independently(self):
        """The q1 side is the seminorm searched at q1, not a re-scoring of the q2 balls."""
        g = interval_function(lambda x: np.cos(3 * x) + x ** 3, resolution=256)
        a = AnisotropyVector.isotropic(1)
        domain = BallSearchDomain.lattice((-1.0,), (1.0,), a, 0.1, 0.5, centers_per_axis=3, n_radii=3, refinement_rounds=1)
        params = _params(p=0.8, q=2.0, s=1)
        config = make_small_config()
        check = q_monotonicity_check(g, params, domain, 1.0, 2.0, config)
        at_q1 = campanato_seminorm(g, params.model_copy(update={"q": 1.0}), domain, config)
        at_q2 = campanato_seminorm(g, params, domain, config)
        assert check.lhs == pytest.approx(at_q1.value, rel=1e-12)
        assert check.rhs >= at_q2.value
        assert check.passed

    def test_q_monotonicity_needs_ordered_exponents(self):
        """q1 < q2 is required."""
        g = interval_function(np.cos, resolution=64)
        a = AnisotropyVector.isotropic(1)
        domain = BallSearchDomain.lattice((-1.0,), (1.0,), a, 0.2, 0.4)
        with pytest.raises(InvalidInputError):
            q_monotonicity_check(g, _params(), domain, 2.0, 2.0)


class TestBallSearch:
    """Failure accounting of the supremum search."""

    def _balls(self):
        centers = np.linspace(-0.8, 0.8, 10)
        return [make_ball((float(c),), 0.1) for c in centers]

    def _search(self, failing):
        def evaluate(ball):
            if ball.center in failing:
                raise DegenerateInputError("no usable nodes")
            return BallScore(ball=ball, weight=1.0, error=abs(ball.center[0]))

        return BallSearch(evaluate=evaluate, box=((-1.0,), (1.0,)), config=SearchConfig())

    def _domain(self, balls):
        return BallSearchDomain(centers=tuple(b.center for b in balls), radii=(0.1,))

    def test_failures_within_limit_are_skipped(self):
        """One failed ball in ten stays within the 10% limit."""
        balls = self._balls()
        outcome = self._search({balls[0].center}).run(self._domain(balls), balls)
        assert outcome.failures == 1
        assert outcome.attempts == 10
        assert outcome.best.ball == balls[-1]

    def test_too_many_failures_raise(self):
        """Two failed balls in ten exceed the 10% limit."""
        balls = self._balls()
        search = self._search({balls[0].center, balls[1].center})
        with pytest.raises(SearchError):
            search.run(self._domain(balls), balls)
