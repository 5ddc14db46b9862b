"""Analytic test-function families evaluated on a midpoint lattice."""

import math
from abc import ABC, abstractmethod
from typing import Any, Dict, Sequence, Tuple

import numpy as np

from ..core import FamilyKind, InvalidInputError
from .lattice import Grid


def _param_point(params: Dict[str, Any], key: str, default: Sequence[float], n: int) -> Tuple[float, ...]:
    value = params.get(key, default)
    if isinstance(value, (int, float)):
        value = (float(value),) * n
    point = tuple(float(v) for v in value)
    if len(point) != n:
        raise InvalidInputError(f"parameter {key!r} has dimension {len(point)}, expected {n}")
    return point


def _param_positive(params: Dict[str, Any], key: str, default: float) -> float:
    value = float(params.get(key, default))
    if not math.isfinite(value) or value <= 0.0:
        raise InvalidInputError(f"parameter {key!r} must be positive and finite, got {value}")
    return value


class BaseFamily(ABC):
    """
    Base interface for function families.

    Each family must expose:
    - kind: FamilyKind enum
    - evaluate(params, grid, rng) -> ndarray of shape grid.shape
    """

    @property
    @abstractmethod
    def kind(self) -> FamilyKind:
        """Return the family kind this implementation serves."""
        pass

    @abstractmethod
    def evaluate(
        self,
        params: Dict[str, Any],
        grid: Grid,
        rng: np.random.Generator,
    ) -> np.ndarray:
        """
        Sample the family at every node of grid.

        Args:
            params: Family parameters (unknown keys are ignored)
            grid: Target lattice
            rng: Generator seeded from the family seed

        Returns:
            Array of shape grid.shape
        """
        pass

    def box_center(self, grid: Grid) -> Tuple[float, ...]:
        return tuple(0.5 * (lo + hi) for lo, hi in zip(grid.lower, grid.upper))


class GaussianBumpFamily(BaseFamily):
    """amplitude * exp(-|x - center|^2 / (2 sigma^2))."""

    @property
    def kind(self) -> FamilyKind:
        return FamilyKind.GAUSSIAN_BUMP

    def evaluate(self, params, grid, rng):
        center = _param_point(params, "center", self.box_center(grid), grid.n)
        sigma = _param_positive(params, "sigma", 0.25)
        amplitude = float(params.get("amplitude", 1.0))
        sq = sum((c - x0) ** 2 for c, x0 in zip(grid.coords, center))
        return amplitude * np.exp(-sq / (2.0 * sigma * sigma))


class RandomPolynomialFamily(BaseFamily):
    """
    Sum of c_alpha u^alpha over |alpha| <= degree with normal coefficients.

    u = (x - center) / half_width keeps the values of order one on the box.
    """

    @property
    def kind(self) -> FamilyKind:
        return FamilyKind.RANDOM_POLYNOMIAL

    def evaluate(self, params, grid, rng):
        # Import here to avoid circular dependencies
        from ..polyproj.monomials import monomial_values, multi_indices

        degree = int(params.get("degree", 2))
        if degree < 0:
            raise InvalidInputError(f"degree must be non-negative, got {degree}")
        center = _param_point(params, "center", self.box_center(grid), grid.n)
        half = tuple(0.5 * w for w in grid.widths)
        half = _param_point(params, "half_width", half, grid.n)
        scale = float(params.get("scale", 1.0))

        indices = multi_indices(grid.n, degree)
        coefficients = scale * rng.standard_normal(len(indices))
        u = [(c - x0) / h for c, x0, h in zip(grid.coords, center, half)]
        values = np.zeros(grid.shape)
        for coefficient, column in zip(coefficients, monomial_values(u, indices)):
            values += coefficient * column
        return values


class SignStepFamily(BaseFamily):
    """+1 where x_axis >= threshold, -1 elsewhere."""

    @property
    def kind(self) -> FamilyKind:
        return FamilyKind.SIGN_STEP

    def evaluate(self, params, grid, rng):
        axis = int(params.get("axis", 0))
        if not 0 <= axis < grid.n:
            raise InvalidInputError(f"axis must lie in [0, {grid.n}), got {axis}")
        threshold = float(params.get("threshold", 0.0))
        return np.where(grid.coords[axis] >= threshold, 1.0, -1.0)


class TrigMixtureFamily(BaseFamily):
    """Sum of terms amplitude_k * cos(omega_k . x + phase_k) with random draws."""

    @property
    def kind(self) -> FamilyKind:
        return FamilyKind.TRIG_MIXTURE

    def evaluate(self, params, grid, rng):
        terms = int(params.get("terms", 3))
        if terms < 1:
            raise InvalidInputError(f"terms must be positive, got {terms}")
        max_frequency = _param_positive(params, "max_frequency", 3.0)
        frequencies = rng.uniform(-max_frequency, max_frequency, size=(terms, grid.n))
        phases = rng.uniform(0.0, 2.0 * math.pi, size=terms)
        amplitudes = rng.standard_normal(terms) / math.sqrt(terms)

        values = np.zeros(grid.shape)
        for omega, phase, amplitude in zip(frequencies, phases, amplitudes):
            argument = sum(w * c for w, c in zip(omega, grid.coords)) + phase
            values += amplitude * np.cos(argument)
        return values


class BoxIndicatorFamily(BaseFamily):
    """Indicator of the closed box [lower, upper] (defaults to the middle half)."""

    @property
    def kind(self) -> FamilyKind:
        return FamilyKind.BOX_INDICATOR

    def evaluate(self, params, grid, rng):
        quarter = [0.25 * w for w in grid.widths]
        lower = _param_point(params, "lower", [lo + q for lo, q in zip(grid.lower, quarter)], grid.n)
        upper = _param_point(params, "upper", [hi - q for hi, q in zip(grid.upper, quarter)], grid.n)
        inside = np.ones(grid.shape, dtype=bool)
        for c, lo, hi in zip(grid.coords, lower, upper):
            inside &= (c >= lo) & (c <= hi)
        return inside.astype(float)


class RadialPowerFamily(BaseFamily):
    """|x - center|^exponent with the Euclidean norm."""

    @property
    def kind(self) -> FamilyKind:
        return FamilyKind.RADIAL_POWER

    def evaluate(self, params, grid, rng):
        center = _param_point(params, "center", (0.0,) * grid.n, grid.n)
        exponent = float(params.get("exponent", 1.0))
        if not math.isfinite(exponent) or exponent < 0.0:
            raise InvalidInputError(f"exponent must be finite and non-negative, got {exponent}")
        radius = np.sqrt(sum((c - x0) ** 2 for c, x0 in zip(grid.coords, center)))
        return radius ** exponent
