"""The natural projection onto P_s on a ball and its sup bound."""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..core import (
    AnisotropicBall,
    AnisotropyVector,
    DegenerateInputError,
    FamilyKind,
    FunctionFamily,
    IncompatibleParametersError,
)
from ..grid import GridFunction, sample, transfer
from .basis import OrthonormalBasis, build_basis
from .monomials import PolynomialRep


_logger = logging.getLogger(__name__)


def in_ball_values(f: GridFunction, basis: OrthonormalBasis) -> np.ndarray:
    """f at the basis' in-ball nodes (sliced when aligned, interpolated otherwise)."""
    if f.n != basis.ball.n:
        raise IncompatibleParametersError(f"function lives in R^{f.n}, ball in R^{basis.ball.n}")
    return transfer(f, basis.grid).values[basis.mask]


def project_values(values: np.ndarray, basis: OrthonormalBasis) -> np.ndarray:
    """Monomial coefficients of the projection of in-ball node values."""
    orthonormal = basis.weight * (basis.orthonormal_values.T @ values)
    return basis.transform.T @ orthonormal


def project(f: GridFunction, basis: OrthonormalBasis) -> PolynomialRep:
    """
    Pi_B f = sum_alpha <f, q_alpha> q_alpha with quadrature inner products.

    The result matches f's moments against every basis element.
    """
    return basis.polynomial(project_values(in_ball_values(f, basis), basis))


def projection_bound_ratio(
    f: GridFunction,
    ball: AnisotropicBall,
    s: int,
    basis: Optional[OrthonormalBasis] = None,
) -> float:
    """
    sup over in-ball nodes of |Pi_B f| divided by the mean of |f| over B.

    Raises:
        DegenerateInputError: If f vanishes on every in-ball node
    """
    if basis is None:
        basis = build_basis(ball, s, grid=f.grid)
    values = in_ball_values(f, basis)
    mean_abs = float(np.mean(np.abs(values)))
    if mean_abs == 0.0:
        raise DegenerateInputError("zero denominator: f vanishes on the ball")
    sup = float(np.max(np.abs(basis.design @ project_values(values, basis))))
    return sup / mean_abs


@dataclass(frozen=True)
class ProjectionCalibration:
    """Empirical sup-bound constant for Pi_B at fixed (n, s) and resolution."""

    n: int
    s: int
    constant: float
    mean_ratio: float
    samples: int


_CALIBRATION_RESOLUTION = {1: 512, 2: 64, 3: 24}

_CALIBRATION_KINDS = (
    FamilyKind.TRIG_MIXTURE,
    FamilyKind.RANDOM_POLYNOMIAL,
    FamilyKind.GAUSSIAN_BUMP,
    FamilyKind.SIGN_STEP,
)


def calibrate_projection_constant(
    n: int,
    s: int,
    samples: int = 200,
    seed: int = 0,
    resolution: Optional[Sequence[int]] = None,
) -> ProjectionCalibration:
    """
    Largest observed projection_bound_ratio on the unit ball over random functions.

    The unit ball B_a(0, 1) is the Euclidean ball for every a, and the ratio is
    dilation invariant, so one ball serves every (a, radius) at this resolution.
    """
    ball = AnisotropicBall(center=(0.0,) * n, radius=1.0, anisotropy=AnisotropyVector.isotropic(n))
    box = ball.bounding_box
    if resolution is None:
        resolution = (_CALIBRATION_RESOLUTION[n],) * n
    rng = np.random.default_rng(seed)
    ratios = []
    for k in range(samples):
        kind = _CALIBRATION_KINDS[k % len(_CALIBRATION_KINDS)]
        params = {
            FamilyKind.TRIG_MIXTURE: {"terms": 4, "max_frequency": 6.0},
            FamilyKind.RANDOM_POLYNOMIAL: {"degree": s + 3},
            FamilyKind.GAUSSIAN_BUMP: {
                "center": tuple(rng.uniform(-0.8, 0.8, n)),
                "sigma": float(rng.uniform(0.05, 0.5)),
            },
            FamilyKind.SIGN_STEP: {"axis": int(rng.integers(n)), "threshold": float(rng.uniform(-0.9, 0.9))},
        }[kind]
        family = FunctionFamily(kind=kind, params=params, seed=int(rng.integers(2**32)))
        f = sample(family, box, resolution)
        basis = build_basis(ball, s, grid=f.grid)
        try:
            ratios.append(projection_bound_ratio(f, ball, s, basis=basis))
        except DegenerateInputError:
            continue
    if not ratios:
        raise DegenerateInputError("every calibration sample vanished on the ball")
    constant = float(np.max(ratios))
    _logger.info("projection constant n=%d s=%d: %.4f over %d samples", n, s, constant, len(ratios))
    return ProjectionCalibration(
        n=n, s=s, constant=constant, mean_ratio=float(np.mean(ratios)), samples=len(ratios)
    )
