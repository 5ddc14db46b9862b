"""Tests for configuration, parameter models, errors and validation helpers."""

import json
import math

import pytest
from pydantic import ValidationError

from aniso_duality.core import (
    DEFAULT_CONFIG,
    AnisotropyVector,
    AtomParams,
    BallSearchDomain,
    CampanatoParams,
    ConvergenceError,
    DegenerateInputError,
    DomainError,
    ExponentVector,
    HarnessConfig,
    InvalidInputError,
    config_digest,
    conjugate_exponent,
    load_config,
    require_finite,
    require_positive,
)
from aniso_duality.core.errors import EXIT_NUMERICAL, EXIT_USAGE


class TestHarnessConfig:
    """Config loading, overrides and digests."""

    def test_defaults(self):
        """Default resolutions follow the dimension."""
        assert DEFAULT_CONFIG.grid.resolution(1) == (1024,)
        assert DEFAULT_CONFIG.grid.resolution(2) == (256, 256)
        assert DEFAULT_CONFIG.grid.resolution(3) == (64, 64, 64)

    def test_overrides_ignore_none(self):
        """None leaves a field alone; other values replace it."""
        config = HarnessConfig()
        assert config.with_overrides(workers=None) is config
        assert config.with_overrides(workers=2, tolerance_scale=0.5).workers == 2

    def test_tolerance_scale(self):
        """effective_tolerances multiplies every tolerance."""
        config = HarnessConfig(tolerance_scale=2.0)
        assert config.effective_tolerances().volume_rel == pytest.approx(2.0 * config.tolerances.volume_rel)
        default = HarnessConfig()
        assert default.effective_tolerances() is default.tolerances

    def test_load_from_json(self, tmp_path):
        """JSON object keys for resolutions are coerced to dimensions."""
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"grid": {"resolution_by_dim": {"1": 64}}, "workers": 2}))
        config = load_config(path)
        assert config.grid.resolution(1) == (64,)
        assert config.workers == 2

    def test_missing_file(self, tmp_path):
        """An unreadable file raises InvalidInputError."""
        with pytest.raises(InvalidInputError):
            load_config(tmp_path / "missing.json")

    def test_schema_violation(self, tmp_path):
        """Schema violations surface as pydantic errors."""
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"grid": {"resolution_by_dim": {"4": 8}}}))
        with pytest.raises(ValidationError):
            load_config(path)

    def test_digest(self):
        """Equal configs share a digest; any change alters it."""
        assert config_digest(HarnessConfig()) == config_digest(HarnessConfig())
        assert config_digest(HarnessConfig()) != config_digest(HarnessConfig(workers=1))
        assert len(config_digest(HarnessConfig())) == 64


class TestParameterModels:
    """Validation of the pydantic parameter models."""

    def test_atom_exponent_range(self):
        """r must lie in (1, inf]."""
        AtomParams(p=ExponentVector.of(1.0), r=math.inf, s=0)
        with pytest.raises(ValidationError):
            AtomParams(p=ExponentVector.of(1.0), r=1.0, s=0)

    def test_campanato_q_range_and_dimension(self):
        """q >= 1 and a, p in the same dimension."""
        a = AnisotropyVector.of(1, 2)
        with pytest.raises(ValidationError):
            CampanatoParams(a=a, p=ExponentVector.of(1, 1), q=0.5, s=0)
        with pytest.raises(ValidationError):
            CampanatoParams(a=a, p=ExponentVector.of(1), q=2.0, s=0)

    def test_exponent_rejects_nan(self):
        """NaN exponents are invalid; inf is allowed."""
        ExponentVector.of(math.inf, 1)
        with pytest.raises(ValidationError):
            ExponentVector.of(math.nan)

    def test_lattice_domain(self):
        """Lattice centers keep the largest ball inside the box."""
        a = AnisotropyVector.of(1, 2)
        domain = BallSearchDomain.lattice((-1.0, -1.0), (1.0, 1.0), a, 0.1, 0.5, centers_per_axis=3, n_radii=2)
        assert len(domain.centers) == 9
        assert domain.radii == pytest.approx((0.1, 0.5))
        xs = sorted({c[0] for c in domain.centers})
        assert xs == pytest.approx([-0.5, 0.0, 0.5])
        assert len(domain.candidate_balls(a)) == 18

    def test_lattice_rejects_bad_radii(self):
        """radius_min must be positive and below radius_max."""
        with pytest.raises(DomainError):
            BallSearchDomain.lattice((-1.0,), (1.0,), AnisotropyVector.of(1), 0.5, 0.1)


class TestErrors:
    """Exit codes and diagnostics."""

    def test_exit_codes(self):
        """Input errors map to 2, numerical failures to 3."""
        assert InvalidInputError("x").exit_code == EXIT_USAGE
        assert DomainError("x").exit_code == EXIT_USAGE
        assert DegenerateInputError("x").exit_code == EXIT_NUMERICAL

    def test_convergence_diagnostics(self):
        """Diagnostics are appended to the message."""
        error = ConvergenceError("did not converge", {"q": 3.0, "iterations": 200})
        assert str(error) == "did not converge (iterations=200, q=3.0)"


class TestValidationHelpers:
    """Small invariant helpers."""

    def test_conjugate_exponent(self):
        """1/r + 1/r' = 1 with the endpoints swapped."""
        assert conjugate_exponent(2.0) == 2.0
        assert conjugate_exponent(3.0) == pytest.approx(1.5)
        assert conjugate_exponent(1.0) == math.inf
        assert conjugate_exponent(math.inf) == 1.0
        with pytest.raises(InvalidInputError):
            conjugate_exponent(0.5)

    def test_require_helpers(self):
        """Non-finite and non-positive values are rejected."""
        assert require_finite("x", 1.5) == 1.5
        assert require_positive("p", math.inf) == math.inf
        with pytest.raises(InvalidInputError):
            require_finite("x", math.nan)
        with pytest.raises(InvalidInputError):
            require_positive("p", 0.0)
