"""Invariant tests for the anisotropic quasi-norm, balls and parameter formulas."""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from aniso_duality.core import (
    AnisotropicBall,
    AnisotropyVector,
    ExponentVector,
    InvalidInputError,
    unit_ball_volume,
)
from aniso_duality.geometry import (
    ball_mask,
    ball_membership,
    bracket,
    dilate,
    grand_maximal_order,
    quasi_norm,
    residual,
    s_min,
    solve_quasi_norm,
    unit_ball,
)
from tests.conftest import make_ball


class TestQuasiNormValues:
    """Closed-form quasi-norm values."""

    def test_euclidean_case(self):
        """a = (1, 1) gives the Euclidean norm."""
        assert quasi_norm(AnisotropyVector.of(1, 1), (3, 4)) == pytest.approx(5.0, rel=1e-11)

    def test_single_axis(self):
        """A point on one axis has quasi-norm |x_i|^{1/a_i}."""
        assert quasi_norm(AnisotropyVector.of(1, 2), (0, 4)) == pytest.approx(2.0, rel=1e-11)

    def test_mixed_axes(self):
        """a = (1, 2), x = (1, 1) solves t^4 - t^2 - 1 = 0."""
        expected = math.sqrt((1.0 + math.sqrt(5.0)) / 2.0)
        assert quasi_norm(AnisotropyVector.of(1, 2), (1, 1)) == pytest.approx(expected, rel=1e-11)

    def test_origin_is_zero(self):
        """The origin has quasi-norm exactly 0."""
        assert quasi_norm(AnisotropyVector.of(1.5, 2, 3), (0, 0, 0)) == 0.0

    def test_non_finite_rejected(self):
        """Non-finite coordinates raise InvalidInputError."""
        with pytest.raises(InvalidInputError):
            quasi_norm(AnisotropyVector.of(1, 1), (math.inf, 0))
        with pytest.raises(InvalidInputError):
            quasi_norm(AnisotropyVector.of(1, 1), (math.nan, 0))

    def test_dimension_mismatch_rejected(self):
        """x must have one coordinate per exponent."""
        with pytest.raises(InvalidInputError):
            quasi_norm(AnisotropyVector.of(1, 1), (1, 2, 3))

    def test_exponents_below_one_rejected(self):
        """Anisotropy exponents must be at least 1."""
        with pytest.raises(ValidationError):
            AnisotropyVector.of(0.5, 1)

    def test_residual_changes_sign_across_bracket(self):
        """F(t) - 1 is positive below the root bracket and non-positive above it."""
        a = AnisotropyVector.of(1, 2.5)
        x = (0.3, -7.0)
        root = solve_quasi_norm(a, x)
        assert residual(a, x, root.lower) > 0.0
        assert residual(a, x, root.upper) <= 0.0
        assert root.upper - root.lower <= 1e-12 * root.upper


class TestQuasiNormLaws:
    """Homogeneity, triangle inequality and Euclidean collapse on random draws."""

    def test_homogeneity(self, rng):
        """|t^a x|_a = t |x|_a to 1e-9 relative."""
        for _ in range(200):
            n = int(rng.integers(1, 4))
            a = AnisotropyVector(a=tuple(rng.uniform(1.0, 3.0, n)))
            x = rng.standard_normal(n)
            t = float(rng.uniform(0.01, 100.0))
            base = quasi_norm(a, x)
            assert abs(quasi_norm(a, dilate(a, t, x)) - t * base) <= 1e-9 * t * base

    def test_triangle_inequality(self, rng):
        """|x + y|_a <= |x|_a + |y|_a."""
        for _ in range(200):
            n = int(rng.integers(1, 4))
            a = AnisotropyVector(a=tuple(rng.uniform(1.0, 3.0, n)))
            x, y = rng.standard_normal(n), rng.standard_normal(n)
            assert quasi_norm(a, x + y) <= quasi_norm(a, x) + quasi_norm(a, y) + 1e-9

    def test_euclidean_collapse(self, rng):
        """a = 1 reproduces the Euclidean norm to 1e-10 relative."""
        for _ in range(100):
            n = int(rng.integers(1, 4))
            x = rng.standard_normal(n) * 10.0
            euclidean = float(np.linalg.norm(x))
            assert quasi_norm(AnisotropyVector.isotropic(n), x) == pytest.approx(euclidean, rel=1e-10)


class TestDilateAndBracket:
    """Dilations and the anisotropic bracket."""

    def test_dilate_examples(self):
        """Componentwise t^{a_i} x_i, identity at t = 1, zero at t = 0."""
        a = AnisotropyVector.of(1, 2)
        assert dilate(a, 4.0, (1, 1)) == (4.0, 16.0)
        assert dilate(a, 1.0, (2.5, -3.0)) == (2.5, -3.0)
        assert dilate(a, 0.0, (5, 7)) == (0.0, 0.0)

    def test_negative_factor_rejected(self):
        """Dilation factors must be nonnegative."""
        with pytest.raises(InvalidInputError):
            dilate(AnisotropyVector.of(1, 2), -1.0, (1, 1))

    def test_bracket_examples(self):
        """<0>_a = 1 and <sqrt(3)>_(1) = 2."""
        assert bracket(AnisotropyVector.of(1, 2), (0, 0)) == pytest.approx(1.0, rel=1e-11)
        assert bracket(AnisotropyVector.of(1), (0,)) == pytest.approx(1.0, rel=1e-11)
        assert bracket(AnisotropyVector.of(1), (math.sqrt(3.0),)) == pytest.approx(2.0, rel=1e-11)

    def test_bracket_bounds(self, rng):
        """max(1, |x|_a) <= <x>_a <= 1 + |x|_a."""
        for _ in range(100):
            n = int(rng.integers(1, 4))
            a = AnisotropyVector(a=tuple(rng.uniform(1.0, 3.0, n)))
            x = rng.standard_normal(n) * 5.0
            norm, value = quasi_norm(a, x), bracket(a, x)
            assert max(1.0, norm) <= value * (1.0 + 1e-11)
            assert value <= (1.0 + norm) * (1.0 + 1e-11)


class TestBalls:
    """Ball membership, masks, bounding boxes and volume."""

    def test_boundary_point_excluded(self):
        """|y|_a = r exactly lies outside the open ball."""
        assert ball_membership(make_ball((0, 0), 2.0, a=(1, 2)), (0, 4)) is False

    def test_center_inside(self):
        """The center of any ball is a member."""
        ball = make_ball((0.3, -0.2), 0.1, a=(1, 3))
        assert ball_membership(ball, ball.center) is True

    def test_euclidean_corner_outside(self):
        """(1, 1) is at distance sqrt(2) from the origin."""
        assert ball_membership(make_ball((0, 0), 1.0), (1, 1)) is False

    def test_scaling_matches_unit_ball(self, rng):
        """y in B(x, r) iff r^{-a}(y - x) in B(0, 1), and the ellipsoid mask agrees."""
        for _ in range(200):
            n = int(rng.integers(1, 4))
            a = AnisotropyVector(a=tuple(rng.uniform(1.0, 3.0, n)))
            ball = AnisotropicBall(center=tuple(rng.uniform(-1, 1, n)), radius=float(rng.uniform(0.2, 2.0)), anisotropy=a)
            offset = rng.standard_normal(n) * 0.7 * np.asarray(ball.half_widths)
            if abs(quasi_norm(a, offset) / ball.radius - 1.0) < 1e-9:
                continue
            y = tuple(c + d for c, d in zip(ball.center, offset))
            direct = ball_membership(ball, y)
            assert direct == ball_membership(unit_ball(a), dilate(a, 1.0 / ball.radius, offset))
            assert direct == bool(ball_mask(ball, [np.array([v]) for v in y])[0])

    def test_bounding_box_and_volume(self):
        """Half-widths r^{a_i} and volume nu_n r^nu."""
        ball = make_ball((1.0, -1.0), 0.5, a=(1, 2))
        lower, upper = ball.bounding_box
        assert lower == pytest.approx((0.5, -1.25))
        assert upper == pytest.approx((1.5, -0.75))
        assert ball.volume == pytest.approx(math.pi * 0.5 ** 3)
        assert unit_ball_volume(3) == pytest.approx(4.0 * math.pi / 3.0)

    def test_radius_must_be_positive(self):
        """Zero radius is rejected by validation."""
        with pytest.raises(ValidationError):
            make_ball((0.0,), 0.0)


class TestParameterFormulas:
    """s_min and the grand maximal order."""

    def test_s_min_examples(self):
        """Direct evaluation of max(0, floor((nu / a_-)(1/p_- - 1)))."""
        assert s_min(AnisotropyVector.of(1, 2), ExponentVector.of(0.5, 1)) == 3
        assert s_min(AnisotropyVector.of(1.5, 2), ExponentVector.of(1, 4)) == 0
        assert s_min(AnisotropyVector.of(1, 1), ExponentVector.of(2 / 3, 2 / 3)) == 1

    def test_grand_maximal_order_examples(self):
        """floor(nu (a_+/a_-)(1/p_ + 1) + nu + 2 a_+) + 1."""
        assert grand_maximal_order(AnisotropyVector.of(1, 1), ExponentVector.of(1, 1)) == 9
        assert grand_maximal_order(AnisotropyVector.of(1, 1), ExponentVector.of(2, 2)) == 9
        assert grand_maximal_order(AnisotropyVector.of(1, 2), ExponentVector.of(1, 1)) == 20

    def test_derived_quantities(self):
        """nu, a_-, a_+, p_-, p_+ and p_ follow their definitions."""
        a = AnisotropyVector.of(1, 2.5, 1.5)
        p = ExponentVector.of(0.7, math.inf, 2)
        assert (a.nu, a.a_minus, a.a_plus) == (5.0, 1.0, 2.5)
        assert (p.p_minus, p.p_plus, p.p_underline) == (0.7, math.inf, 0.7)
        assert ExponentVector.of(2, 3).p_underline == 1.0
