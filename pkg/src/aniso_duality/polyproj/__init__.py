"""Polynomial spaces P_s, orthonormal bases on balls and the natural projection."""

from .basis import OrthonormalBasis, build_basis, clear_basis_cache
from .monomials import (
    MultiIndex,
    PolynomialRep,
    monomial_values,
    multi_indices,
    polynomial_dimension,
    vandermonde,
)
from .projection import (
    ProjectionCalibration,
    calibrate_projection_constant,
    in_ball_values,
    project,
    project_values,
    projection_bound_ratio,
)

__all__ = [
    "MultiIndex",
    "PolynomialRep",
    "multi_indices",
    "polynomial_dimension",
    "monomial_values",
    "vandermonde",
    "OrthonormalBasis",
    "build_basis",
    "clear_basis_cache",
    "project",
    "project_values",
    "in_ball_values",
    "projection_bound_ratio",
    "ProjectionCalibration",
    "calibrate_projection_constant",
]
