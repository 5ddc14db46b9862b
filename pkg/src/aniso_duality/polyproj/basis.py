"""Orthonormal bases of P_s on a ball under the discrete L^2(B) inner product."""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import LinAlgError, cholesky, eigh, solve_triangular

from ..core import (
    AnisotropicBall,
    BasisFactorization,
    ConditioningError,
    InsufficientNodesError,
)
from ..grid import Grid, ball_grid_mask
from ..norms import bounding_grid
from .monomials import MultiIndex, PolynomialRep, multi_indices, vandermonde


_logger = logging.getLogger(__name__)

GRAM_TOL = 1e-8
EIGEN_FLOOR = 1e-12
MIN_NODES_PER_DIMENSION = 3


@dataclass(frozen=True, eq=False)
class OrthonormalBasis:
    """
    q_j = sum_m transform[j, m] u^{alpha_m}, orthonormal for w * sum over in-ball nodes.

    grid is the lattice on the ball's bounding box whose in-ball nodes (mask)
    define the inner product; design holds the monomials at those nodes.
    """

    ball: AnisotropicBall
    degree: int
    grid: Grid
    mask: np.ndarray = field(repr=False)
    design: np.ndarray = field(repr=False)
    transform: np.ndarray = field(repr=False)
    gram_residual: float
    factorization: BasisFactorization

    @property
    def indices(self) -> Tuple[MultiIndex, ...]:
        return multi_indices(self.ball.n, self.degree)

    @property
    def size(self) -> int:
        return self.transform.shape[0]

    @property
    def weight(self) -> float:
        return self.grid.cell_weight

    @property
    def nodes(self) -> int:
        return self.design.shape[0]

    @property
    def volume(self) -> float:
        """Quadrature volume of the ball: in-ball nodes times the cell weight."""
        return self.nodes * self.weight

    @property
    def orthonormal_values(self) -> np.ndarray:
        """q_j at the in-ball nodes, one column per basis element."""
        return self.design @ self.transform.T

    @property
    def basis(self) -> List[PolynomialRep]:
        return [PolynomialRep.on_ball(self.ball, self.degree, row) for row in self.transform]

    def polynomial(self, coefficients: Sequence[float]) -> PolynomialRep:
        """Polynomial with the given monomial coefficients in this ball's coordinates."""
        return PolynomialRep.on_ball(self.ball, self.degree, coefficients)

    def in_ball_values(self, poly: PolynomialRep) -> np.ndarray:
        """poly at the in-ball nodes (design-matrix evaluation)."""
        return self.design @ poly.coefficients


def _orthonormalize(gram: np.ndarray, factorization: BasisFactorization) -> np.ndarray:
    k = gram.shape[0]
    if factorization == BasisFactorization.CHOLESKY:
        lower = cholesky(gram, lower=True)
        return solve_triangular(lower, np.eye(k), lower=True)
    eigenvalues, vectors = eigh(gram)
    floor = EIGEN_FLOOR * float(np.trace(gram))
    eigenvalues = np.maximum(eigenvalues, floor)
    return (vectors / np.sqrt(eigenvalues)).T


def _gram_residual(design: np.ndarray, transform: np.ndarray, weight: float) -> float:
    q = design @ transform.T
    return float(np.max(np.abs(weight * (q.T @ q) - np.eye(transform.shape[0]))))


@lru_cache(maxsize=2048)
def _cached_basis(ball: AnisotropicBall, degree: int, grid: Grid) -> OrthonormalBasis:
    mask = ball_grid_mask(ball, grid)
    indices = multi_indices(ball.n, degree)
    nodes = int(mask.sum())
    if nodes < MIN_NODES_PER_DIMENSION * len(indices):
        raise InsufficientNodesError(
            f"{nodes} in-ball nodes cannot resolve {len(indices)} polynomials of degree <= {degree}"
        )
    u = [((c - x0) / h)[mask] for c, x0, h in zip(grid.coords, ball.center, ball.half_widths)]
    design = vandermonde(u, indices)
    weight = grid.cell_weight
    gram = weight * (design.T @ design)

    residual = float("inf")
    transform = None
    used = BasisFactorization.CHOLESKY
    try:
        transform = _orthonormalize(gram, BasisFactorization.CHOLESKY)
        residual = _gram_residual(design, transform, weight)
    except LinAlgError:
        _logger.debug("Cholesky failed on ball %s; using eigenvalue floor", ball.center)
    if residual > GRAM_TOL:
        used = BasisFactorization.EIGEN_FLOOR
        transform = _orthonormalize(gram, BasisFactorization.EIGEN_FLOOR)
        residual = _gram_residual(design, transform, weight)
        if residual > GRAM_TOL:
            raise ConditioningError(
                f"Gram matrix singular beyond eigenvalue floor (residual {residual:.3e}, degree {degree})"
            )

    for array in (mask, design, transform):
        array.flags.writeable = False
    return OrthonormalBasis(
        ball=ball,
        degree=degree,
        grid=grid,
        mask=mask,
        design=design,
        transform=transform,
        gram_residual=residual,
        factorization=used,
    )


def build_basis(
    ball: AnisotropicBall,
    s: int,
    resolution: Optional[Sequence[int]] = None,
    grid: Optional[Grid] = None,
) -> OrthonormalBasis:
    """
    Orthonormalize ball-adapted monomials of degree <= s on ball.

    With grid given, the inner product uses that lattice's cells meeting the
    ball, so projections of functions on grid are exact slices. Otherwise a
    lattice on the ball's bounding box at resolution is used.

    Raises:
        InsufficientNodesError: Fewer than 3 * binomial(n + s, s) in-ball nodes
        ConditioningError: Gram residual above 1e-8 after the eigenvalue floor
    """
    if grid is not None:
        lattice, _ = grid.crop_to_box(*ball.bounding_box)
    else:
        lattice = bounding_grid(ball, resolution)
    return _cached_basis(ball, int(s), lattice)


def clear_basis_cache() -> None:
    """Drop memoized bases."""
    _cached_basis.cache_clear()
