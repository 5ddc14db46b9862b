"""Harness configuration: one JSON file, CLI flags override, digest in every report."""

import hashlib
import json
import math
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .errors import InvalidInputError


class GridConfig(BaseModel):
    """Default midpoint-lattice resolutions per dimension."""

    model_config = ConfigDict(frozen=True)

    resolution_by_dim: Dict[int, int] = Field(
        default_factory=lambda: {1: 1024, 2: 256, 3: 64}
    )

    @field_validator("resolution_by_dim", mode="after")
    @classmethod
    def validate_resolutions(cls, v: Dict[int, int]) -> Dict[int, int]:
        for n, res in v.items():
            if n not in (1, 2, 3):
                raise ValueError(f"only dimensions 1-3 are supported, got {n}")
            if res < 2:
                raise ValueError(f"resolution must be >= 2, got {res} for n={n}")
        return v

    def resolution(self, n: int) -> Tuple[int, ...]:
        """Per-axis resolution tuple for dimension n."""
        if n not in self.resolution_by_dim:
            raise InvalidInputError(f"no default resolution for dimension {n}")
        return (self.resolution_by_dim[n],) * n


class SolverConfig(BaseModel):
    """Iteration caps and floors for the inner best-approximation solvers."""

    model_config = ConfigDict(frozen=True)

    max_iterations: int = Field(default=200, ge=1)
    residual_floor: float = Field(default=1e-10, gt=0.0)
    objective_tol: float = Field(default=1e-8, gt=0.0)
    minimax_spread_tol: float = Field(default=1e-8, gt=0.0)
    lp_polish: bool = True


class SearchConfig(BaseModel):
    """Defaults for the lattice + refinement supremum search."""

    model_config = ConfigDict(frozen=True)

    centers_per_axis: int = Field(default=5, ge=1)
    n_radii: int = Field(default=4, ge=1)
    radius_min_fraction: float = Field(
        default=0.05, gt=0.0, description="Smallest radius as a fraction of the largest"
    )
    refinement_rounds: int = Field(default=2, ge=0)
    golden_iterations: int = Field(default=10, ge=1)
    max_failure_fraction: float = Field(default=0.10, ge=0.0, le=1.0)


class ToleranceConfig(BaseModel):
    """Every tolerance the verification suites assert against."""

    model_config = ConfigDict(frozen=True)

    homogeneity_rel: float = 1e-9
    triangle_abs: float = 1e-9
    euclidean_rel: float = 1e-10
    volume_rel: float = 0.02
    rectangle_rel: float = 1e-10
    isotropic_rel: float = 1e-12
    projection_fix: float = 1e-8
    moment: float = 1e-8
    covariance: float = 1e-8
    atom_size: float = 1e-9
    atom_moment: float = 1e-7
    sign_atom: float = 1e-9
    grid: float = 0.02
    q2_agreement: float = 1e-10
    minimax_agreement: float = 1e-6
    median_agreement: float = 1e-3
    q_monotonicity: float = 1e-6
    benchmark_rel: float = 0.02
    benchmark_center: float = 0.02
    single_ball: float = 1e-6
    single_ball_abs: float = 1e-12
    functional: float = 1e-5
    dual_norm: float = 1e-5
    dual_norm_benchmark: float = 0.05
    sharpness: float = 1e-3
    identity: float = 1e-9

    def scaled(self, factor: float) -> "ToleranceConfig":
        """Multiply every tolerance by factor."""
        return ToleranceConfig(**{k: v * factor for k, v in self.model_dump().items()})


class SuiteCounts(BaseModel):
    """Number of random cases per property block."""

    model_config = ConfigDict(frozen=True)

    quasi_norm_laws: int = 10_000
    bracket: int = 200
    ball_scaling: int = 1_000
    ball_volume: int = 20
    rectangle: int = 400
    isotropic: int = 400
    axis_infinity: int = 200
    projection: int = 100
    atoms: int = 500
    l1_lower_bound: int = 500
    q2_agreement: int = 100
    minimax: int = 100
    median: int = 100
    q_monotonicity: int = 200
    single_ball: int = 1_000
    functional: int = 200
    dual_norm: int = 10
    extremal: int = 20
    equality: int = 20
    polynomial_pairing: int = 100
    seminorm_axioms: int = 20
    bilinearity: int = 20
    projection_constant: int = 4


class HarnessConfig(BaseModel):
    """Top-level configuration for the library defaults and the suites."""

    model_config = ConfigDict(frozen=True)

    grid: GridConfig = Field(default_factory=GridConfig)
    solver: SolverConfig = Field(default_factory=SolverConfig)
    search: SearchConfig = Field(default_factory=SearchConfig)
    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)
    suites: SuiteCounts = Field(default_factory=SuiteCounts)
    workers: int = Field(default=4, ge=1)
    tolerance_scale: float = Field(default=1.0, ge=0.0)

    @field_validator("tolerance_scale", mode="after")
    @classmethod
    def validate_scale(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError(f"tolerance_scale must be finite, got {v}")
        return v

    def effective_tolerances(self) -> ToleranceConfig:
        """Tolerances after applying tolerance_scale."""
        if self.tolerance_scale == 1.0:
            return self.tolerances
        return self.tolerances.scaled(self.tolerance_scale)

    def with_overrides(self, **updates: object) -> "HarnessConfig":
        """Copy with top-level fields replaced; None values are ignored."""
        clean = {k: v for k, v in updates.items() if v is not None}
        if not clean:
            return self
        return HarnessConfig.model_validate({**self.model_dump(), **clean})


def load_config(path: Optional[Union[str, Path]] = None) -> HarnessConfig:
    """
    Load a HarnessConfig from a JSON file.

    Args:
        path: JSON file path; None returns the defaults

    Raises:
        InvalidInputError: If the file cannot be read or is not valid JSON
        pydantic.ValidationError: If the content violates the schema
    """
    if path is None:
        return HarnessConfig()
    try:
        payload = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInputError(f"cannot read config {path}: {exc}") from exc
    return HarnessConfig.model_validate(payload)


def config_digest(config: HarnessConfig) -> str:
    """SHA-256 of the canonical JSON dump."""
    canonical = json.dumps(config.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


DEFAULT_CONFIG = HarnessConfig()
