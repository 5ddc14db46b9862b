"""Graded multi-indices, monomial evaluation and polynomial representations."""

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import List, Sequence, Tuple

import numpy as np

from ..core import AnisotropicBall, IncompatibleParametersError, InvalidInputError


MultiIndex = Tuple[int, ...]


@lru_cache(maxsize=64)
def multi_indices(n: int, s: int) -> Tuple[MultiIndex, ...]:
    """All alpha in N^n with |alpha| <= s, ordered by total degree then reverse-lexicographically."""
    if n < 1 or s < 0:
        raise InvalidInputError(f"need n >= 1 and s >= 0, got n={n}, s={s}")
    graded: List[MultiIndex] = []
    for degree in range(s + 1):
        level = [alpha for alpha in product(range(degree + 1), repeat=n) if sum(alpha) == degree]
        graded.extend(sorted(level, reverse=True))
    return tuple(graded)


def polynomial_dimension(n: int, s: int) -> int:
    """binomial(n + s, s)."""
    return math.comb(n + s, s)


def monomial_values(u: Sequence[np.ndarray], indices: Sequence[MultiIndex]) -> List[np.ndarray]:
    """u^alpha for each alpha, broadcasting over the coordinate arrays."""
    u = [np.asarray(ui, dtype=float) for ui in u]
    top = max((max(alpha) for alpha in indices), default=0)
    powers = []
    for ui in u:
        table = [np.ones_like(ui)]
        for _ in range(top):
            table.append(table[-1] * ui)
        powers.append(table)
    columns = []
    for alpha in indices:
        column = powers[0][alpha[0]]
        for axis in range(1, len(u)):
            column = column * powers[axis][alpha[axis]]
        columns.append(column)
    return columns


def vandermonde(u: Sequence[np.ndarray], indices: Sequence[MultiIndex]) -> np.ndarray:
    """Matrix with one row per point and one column per multi-index."""
    return np.stack([np.ravel(c) for c in monomial_values(u, indices)], axis=1)


@dataclass(frozen=True, eq=False)
class PolynomialRep:
    """
    P(y) = sum_alpha c_alpha u^alpha with u_i = (y_i - center_i) / scale_i.

    Ball-adapted coordinates map a ball B_a(x, r) onto the unit ball, so the
    coefficient of a given polynomial depends on the ball it is expressed in.
    """

    center: Tuple[float, ...]
    scales: Tuple[float, ...]
    degree: int
    coefficients: np.ndarray = field(repr=False)

    def __post_init__(self):
        """Check the coefficient count against binomial(n + s, s)."""
        coefficients = np.array(self.coefficients, dtype=float).ravel()
        expected = polynomial_dimension(len(self.center), self.degree)
        if coefficients.size != expected:
            raise InvalidInputError(f"expected {expected} coefficients, got {coefficients.size}")
        if len(self.scales) != len(self.center) or any(h <= 0.0 for h in self.scales):
            raise InvalidInputError("scales must be positive, one per axis")
        coefficients.flags.writeable = False
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def on_ball(cls, ball: AnisotropicBall, degree: int, coefficients: Sequence[float]) -> "PolynomialRep":
        return cls(ball.center, ball.half_widths, degree, np.asarray(coefficients, dtype=float))

    @property
    def n(self) -> int:
        return len(self.center)

    @property
    def indices(self) -> Tuple[MultiIndex, ...]:
        return multi_indices(self.n, self.degree)

    def local_coords(self, coords: Sequence[np.ndarray]) -> List[np.ndarray]:
        if len(coords) != self.n:
            raise InvalidInputError(f"got {len(coords)} coordinate arrays for a polynomial on R^{self.n}")
        return [(np.asarray(c, dtype=float) - x0) / h for c, x0, h in zip(coords, self.center, self.scales)]

    def evaluate(self, coords: Sequence[np.ndarray]) -> np.ndarray:
        """Exact evaluation at broadcastable coordinate arrays."""
        columns = monomial_values(self.local_coords(coords), self.indices)
        total = np.zeros(np.broadcast_shapes(*(c.shape for c in columns)))
        for c, column in zip(self.coefficients, columns):
            total = total + c * column
        return total

    def __call__(self, point: Sequence[float]) -> float:
        return float(self.evaluate([np.asarray(v) for v in point]))

    def _check_compatible(self, other: "PolynomialRep") -> None:
        if (
            self.degree != other.degree
            or not np.allclose(self.center, other.center, rtol=0.0, atol=1e-14)
            or not np.allclose(self.scales, other.scales, rtol=1e-14, atol=0.0)
        ):
            raise IncompatibleParametersError("polynomials are expressed in different ball coordinates")

    def __add__(self, other: "PolynomialRep") -> "PolynomialRep":
        self._check_compatible(other)
        return PolynomialRep(self.center, self.scales, self.degree, self.coefficients + other.coefficients)

    def __sub__(self, other: "PolynomialRep") -> "PolynomialRep":
        self._check_compatible(other)
        return PolynomialRep(self.center, self.scales, self.degree, self.coefficients - other.coefficients)

    def __mul__(self, scalar: float) -> "PolynomialRep":
        return PolynomialRep(self.center, self.scales, self.degree, self.coefficients * float(scalar))

    __rmul__ = __mul__
