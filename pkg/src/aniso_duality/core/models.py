"""Pydantic v2 models for duality parameters and records with strict validation."""

import math
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    computed_field,
    field_validator,
    model_validator,
)
from scipy.special import gamma

from .enums import FamilyKind
from .errors import DomainError, IncompatibleParametersError


Point = Tuple[float, ...]


def unit_ball_volume(n: int) -> float:
    """Volume of the Euclidean unit ball in R^n."""
    return math.pi ** (n / 2.0) / float(gamma(n / 2.0 + 1.0))


class AnisotropyVector(BaseModel):
    """Exponent vector a with every a_i >= 1."""

    model_config = ConfigDict(frozen=True)

    a: Tuple[float, ...] = Field(min_length=1, description="Anisotropy exponents")

    @field_validator("a", mode="after")
    @classmethod
    def validate_exponents(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        """Each a_i must be finite and at least 1."""
        for i, ai in enumerate(v):
            if not math.isfinite(ai) or ai < 1.0:
                raise ValueError(f"a[{i}] must be a finite real >= 1, got {ai}")
        return v

    @classmethod
    def of(cls, *values: float) -> "AnisotropyVector":
        """Build from positional exponents."""
        return cls(a=tuple(float(x) for x in values))

    @classmethod
    def isotropic(cls, n: int) -> "AnisotropyVector":
        """The Euclidean case a = (1, ..., 1)."""
        return cls(a=(1.0,) * n)

    @property
    def n(self) -> int:
        return len(self.a)

    @computed_field
    @property
    def nu(self) -> float:
        """Homogeneous dimension, the sum of the exponents."""
        return float(sum(self.a))

    @computed_field
    @property
    def a_minus(self) -> float:
        return float(min(self.a))

    @computed_field
    @property
    def a_plus(self) -> float:
        return float(max(self.a))

    def extended(self) -> "AnisotropyVector":
        """The (n+1)-vector (1, a) used by the anisotropic bracket."""
        return AnisotropyVector(a=(1.0,) + self.a)


class ExponentVector(BaseModel):
    """Integrability vector p with positive entries, +inf allowed per component."""

    model_config = ConfigDict(frozen=True)

    p: Tuple[float, ...] = Field(min_length=1, description="Integrability exponents")

    @field_validator("p", mode="after")
    @classmethod
    def validate_exponents(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        """Each p_i must be positive (inf allowed, NaN rejected)."""
        for i, pi in enumerate(v):
            if math.isnan(pi) or pi <= 0.0:
                raise ValueError(f"p[{i}] must be positive, got {pi}")
        return v

    @classmethod
    def of(cls, *values: float) -> "ExponentVector":
        """Build from positional exponents."""
        return cls(p=tuple(float(x) for x in values))

    @classmethod
    def constant(cls, p: float, n: int) -> "ExponentVector":
        """The isotropic vector (p, ..., p)."""
        return cls(p=(float(p),) * n)

    @property
    def n(self) -> int:
        return len(self.p)

    @computed_field
    @property
    def p_minus(self) -> float:
        return float(min(self.p))

    @computed_field
    @property
    def p_plus(self) -> float:
        return float(max(self.p))

    @computed_field
    @property
    def p_underline(self) -> float:
        """min(p_-, 1), the exponent aggregating atomic coefficients."""
        return min(self.p_minus, 1.0)

    def within_unit_cube(self) -> bool:
        """True when every p_i lies in (0, 1]."""
        return all(pi <= 1.0 for pi in self.p)


class AnisotropicBall(BaseModel):
    """Ball {y : |y - center|_a < radius}."""

    model_config = ConfigDict(frozen=True)

    center: Point
    radius: float = Field(gt=0.0, description="Radius in the quasi-metric")
    anisotropy: AnisotropyVector

    @field_validator("center", mode="after")
    @classmethod
    def validate_center(cls, v: Point) -> Point:
        """Center coordinates must be finite."""
        if not all(math.isfinite(c) for c in v):
            raise ValueError(f"center must be finite, got {v}")
        return v

    @field_validator("radius", mode="after")
    @classmethod
    def validate_radius(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError(f"radius must be finite, got {v}")
        return v

    @model_validator(mode="after")
    def validate_dimension(self) -> "AnisotropicBall":
        """Center and anisotropy must live in the same R^n."""
        if len(self.center) != self.anisotropy.n:
            raise ValueError(
                f"center has dimension {len(self.center)} but anisotropy has {self.anisotropy.n}"
            )
        return self

    @property
    def n(self) -> int:
        return len(self.center)

    @computed_field
    @property
    def half_widths(self) -> Point:
        """Per-axis semi-axes radius^{a_i}."""
        return tuple(self.radius ** ai for ai in self.anisotropy.a)

    @computed_field
    @property
    def bounding_box(self) -> Tuple[Point, Point]:
        """(lower, upper) corners of center + prod [-radius^{a_i}, radius^{a_i}]."""
        lower = tuple(c - h for c, h in zip(self.center, self.half_widths))
        upper = tuple(c + h for c, h in zip(self.center, self.half_widths))
        return lower, upper

    @computed_field
    @property
    def volume(self) -> float:
        """Exact Lebesgue measure nu_n * radius^nu."""
        return unit_ball_volume(self.n) * self.radius ** self.anisotropy.nu


class FunctionFamily(BaseModel):
    """Seeded description of a test function."""

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    params: Dict[str, Any] = Field(default_factory=dict)
    seed: int = Field(default=0, ge=0, lt=2**64)


class AtomParams(BaseModel):
    """(p, r, s) parameters shared by atoms."""

    model_config = ConfigDict(frozen=True)

    p: ExponentVector
    r: float = Field(description="Size exponent in (1, inf]")
    s: int = Field(ge=0, description="Vanishing-moment degree")

    @field_validator("r", mode="after")
    @classmethod
    def validate_r(cls, v: float) -> float:
        if math.isnan(v) or v <= 1.0:
            raise ValueError(f"r must lie in (1, inf], got {v}")
        return v


class CampanatoParams(BaseModel):
    """Parameters of the anisotropic mixed-norm Campanato seminorm."""

    model_config = ConfigDict(frozen=True)

    a: AnisotropyVector
    p: ExponentVector
    q: float = Field(description="Inner exponent in [1, inf]")
    s: int = Field(ge=0)

    @field_validator("q", mode="after")
    @classmethod
    def validate_q(cls, v: float) -> float:
        if math.isnan(v) or v < 1.0:
            raise ValueError(f"q must lie in [1, inf], got {v}")
        return v

    @model_validator(mode="after")
    def validate_dimension(self) -> "CampanatoParams":
        if self.a.n != self.p.n:
            raise ValueError(f"a has dimension {self.a.n} but p has {self.p.n}")
        return self


class BallSearchDomain(BaseModel):
    """Finite surrogate for the family of all balls."""

    model_config = ConfigDict(frozen=True)

    centers: Tuple[Point, ...] = Field(min_length=1)
    radii: Tuple[float, ...] = Field(min_length=1)
    refinement_rounds: int = Field(default=0, ge=0)
    explicit_balls: Tuple[AnisotropicBall, ...] = ()

    @field_validator("radii", mode="after")
    @classmethod
    def validate_radii(cls, v: Tuple[float, ...]) -> Tuple[float, ...]:
        for r in v:
            if not math.isfinite(r) or r <= 0.0:
                raise ValueError(f"radii must be positive and finite, got {r}")
        return v

    @classmethod
    def lattice(
        cls,
        lower: Point,
        upper: Point,
        anisotropy: AnisotropyVector,
        radius_min: float,
        radius_max: float,
        centers_per_axis: int = 5,
        n_radii: int = 4,
        refinement_rounds: int = 0,
    ) -> "BallSearchDomain":
        """
        Build a center lattice and log-spaced radii.

        Centers are placed on the box shrunk by the largest ball's half-widths,
        so every ball of the domain fits inside [lower, upper].
        """
        if radius_min <= 0.0 or radius_max < radius_min:
            raise DomainError(f"bad radius bounds [{radius_min}, {radius_max}]")
        half = [radius_max ** ai for ai in anisotropy.a]
        axes = []
        for lo, hi, h in zip(lower, upper, half):
            inner_lo, inner_hi = lo + h, hi - h
            if inner_hi < inner_lo:
                raise DomainError("largest ball does not fit in the box")
            if centers_per_axis == 1 or inner_hi == inner_lo:
                axes.append(np.array([0.5 * (inner_lo + inner_hi)]))
            else:
                axes.append(np.linspace(inner_lo, inner_hi, centers_per_axis))
        mesh = np.meshgrid(*axes, indexing="ij")
        centers = tuple(
            tuple(float(m.flat[k]) for m in mesh) for k in range(mesh[0].size)
        )
        radii = tuple(float(r) for r in np.geomspace(radius_min, radius_max, n_radii))
        return cls(centers=centers, radii=radii, refinement_rounds=refinement_rounds)

    def with_balls(self, balls: List[AnisotropicBall]) -> "BallSearchDomain":
        """A copy that also searches the given balls."""
        return self.model_copy(update={"explicit_balls": self.explicit_balls + tuple(balls)})

    def candidate_balls(self, anisotropy: AnisotropyVector) -> List[AnisotropicBall]:
        """Lattice balls followed by the explicit balls, in a fixed order."""
        balls = [
            AnisotropicBall(center=c, radius=r, anisotropy=anisotropy)
            for r in self.radii
            for c in self.centers
        ]
        for ball in self.explicit_balls:
            if ball.anisotropy != anisotropy:
                raise IncompatibleParametersError(
                    "explicit ball anisotropy differs from the search anisotropy"
                )
            balls.append(ball)
        return balls


class ValidationRecord(BaseModel):
    """Measured margins for the three atom conditions."""

    model_config = ConfigDict(frozen=True)

    support_ok: bool
    support_leak: float = Field(ge=0.0, description="max |a| at nodes outside the ball")
    size_ok: bool
    size_ratio: float = Field(ge=0.0, description="||a||_r over |B|^{1/r}/||chi_B||")
    moments_ok: bool
    moment_residual: float = Field(ge=0.0, description="max scaled moment")

    @computed_field
    @property
    def passed(self) -> bool:
        return self.support_ok and self.size_ok and self.moments_ok


class InequalityCheck(BaseModel):
    """lhs <= rhs verification outcome."""

    model_config = ConfigDict(frozen=True)

    lhs: float
    rhs: float
    passed: bool
    detail: Optional[str] = None

    @computed_field
    @property
    def margin(self) -> float:
        """Raw slack rhs - lhs (negative means lhs exceeded rhs)."""
        return self.rhs - self.lhs


class BallScore(BaseModel):
    """One evaluated ball of a supremum search."""

    model_config = ConfigDict(frozen=True)

    ball: AnisotropicBall
    weight: float
    error: float

    @computed_field
    @property
    def score(self) -> float:
        return self.weight * self.error


class CampanatoResult(BaseModel):
    """Searched (lower-bound) value of the Campanato seminorm."""

    model_config = ConfigDict(frozen=True)

    value: float = Field(ge=0.0)
    witness: AnisotropicBall
    q: float
    s: int
    balls_evaluated: int
    failures: int
    lower_bound: bool = True
    scores: Tuple[BallScore, ...] = Field(default=(), exclude=True)
