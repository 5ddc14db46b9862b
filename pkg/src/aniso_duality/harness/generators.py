"""Seeded random draws shared by the verification suites."""

import math
from typing import Optional, Sequence, Tuple

import numpy as np

from ..atoms import Atom, make_atom
from ..core import (
    AnisotropicBall,
    AnisotropyVector,
    AtomParams,
    BallSearchDomain,
    ExponentVector,
    FamilyKind,
    FunctionFamily,
)
from ..core.config import ToleranceConfig
from ..geometry import radius_fitting, s_min
from ..grid import Box, Grid, GridFunction, sample
from ..polyproj import PolynomialRep, polynomial_dimension


SUITE_RESOLUTION = {1: 256, 2: 48, 3: 16}

ATOM_R_CHOICES = (1.5, 2.0, 4.0, math.inf)
MAX_ATOM_DEGREE = 3

SMOOTH_KINDS = (FamilyKind.TRIG_MIXTURE,)
G_KINDS = (
    FamilyKind.TRIG_MIXTURE,
    FamilyKind.GAUSSIAN_BUMP,
    FamilyKind.SIGN_STEP,
    FamilyKind.RANDOM_POLYNOMIAL,
)
CONTINUOUS_KINDS = (
    FamilyKind.TRIG_MIXTURE,
    FamilyKind.GAUSSIAN_BUMP,
    FamilyKind.RANDOM_POLYNOMIAL,
)


def unit_box(n: int) -> Box:
    """[-1, 1]^n."""
    return (-1.0,) * n, (1.0,) * n


def suite_resolution(n: int) -> Tuple[int, ...]:
    return (SUITE_RESOLUTION[n],) * n


def random_anisotropy(rng: np.random.Generator, n: int, a_max: float = 2.0) -> AnisotropyVector:
    return AnisotropyVector(a=tuple(float(x) for x in rng.uniform(1.0, a_max, n)))


def random_exponent(
    rng: np.random.Generator,
    n: int,
    low: float,
    high: float,
    inf_probability: float = 0.0,
) -> ExponentVector:
    """Independent uniform p_i in [low, high], each replaced by inf with the given probability."""
    values = []
    for _ in range(n):
        p_i = float(rng.uniform(low, high))
        if inf_probability > 0.0 and rng.uniform() < inf_probability:
            p_i = math.inf
        values.append(p_i)
    return ExponentVector(p=tuple(values))


def random_ball(
    rng: np.random.Generator,
    a: AnisotropyVector,
    box: Box,
    radius_range: Tuple[float, float] = (0.4, 0.9),
) -> AnisotropicBall:
    """A ball inside box, its radius shrunk when the drawn one does not fit."""
    lower, upper = box
    radius = float(rng.uniform(*radius_range))
    limits = [0.5 * (hi - lo) for lo, hi in zip(lower, upper)]
    if any(radius ** ai > 0.999 * h for ai, h in zip(a.a, limits)):
        radius = 0.95 * radius_fitting(a, limits)
    center = tuple(
        float(rng.uniform(lo + radius ** ai, hi - radius ** ai))
        for lo, hi, ai in zip(lower, upper, a.a)
    )
    return AnisotropicBall(center=center, radius=radius, anisotropy=a)


def random_family(
    rng: np.random.Generator,
    n: int,
    kinds: Sequence[FamilyKind] = SMOOTH_KINDS,
) -> FunctionFamily:
    kind = kinds[int(rng.integers(len(kinds)))]
    if kind == FamilyKind.TRIG_MIXTURE:
        params = {"terms": 3, "max_frequency": 4.0}
    elif kind == FamilyKind.GAUSSIAN_BUMP:
        params = {
            "center": tuple(float(x) for x in rng.uniform(-0.5, 0.5, n)),
            "sigma": float(rng.uniform(0.2, 0.8)),
        }
    elif kind == FamilyKind.SIGN_STEP:
        params = {"axis": int(rng.integers(n)), "threshold": float(rng.uniform(-0.5, 0.5))}
    else:
        params = {"degree": 4}
    return FunctionFamily(kind=kind, params=params, seed=int(rng.integers(2**32)))


def random_function(
    rng: np.random.Generator,
    box: Box,
    resolution: Sequence[int],
    kinds: Sequence[FamilyKind] = SMOOTH_KINDS,
) -> GridFunction:
    return sample(random_family(rng, len(resolution), kinds), box, resolution)


def random_polynomial(rng: np.random.Generator, ball: AnisotropicBall, s: int) -> PolynomialRep:
    coefficients = rng.standard_normal(polynomial_dimension(ball.n, s))
    return PolynomialRep.on_ball(ball, s, coefficients)


def polynomial_function(poly: PolynomialRep, grid: Grid) -> GridFunction:
    """poly sampled at every node of grid."""
    return GridFunction(grid, poly.evaluate(grid.coords))


def dilated_copy(
    f: GridFunction,
    ball: AnisotropicBall,
    offset: Sequence[float],
    factor: float,
) -> Tuple[GridFunction, AnisotropicBall]:
    """
    The pair (f o phi^{-1}, phi(ball)) for phi(y) = offset + factor^a y.

    Values are carried over unchanged; only the lattice moves.
    """
    a = ball.anisotropy.a
    scale = [factor ** ai for ai in a]
    lower = tuple(z + k * lo for z, k, lo in zip(offset, scale, f.grid.lower))
    upper = tuple(z + k * hi for z, k, hi in zip(offset, scale, f.grid.upper))
    grid = Grid(lower, upper, f.grid.resolution)
    center = tuple(z + k * c for z, k, c in zip(offset, scale, ball.center))
    moved = AnisotropicBall(center=center, radius=ball.radius * factor, anisotropy=ball.anisotropy)
    return GridFunction(grid, f.values), moved



def small_domain(
    box: Box,
    a: AnisotropyVector,
    centers_per_axis: int = 3,
    n_radii: int = 2,
    radius_min: float = 0.4,
) -> BallSearchDomain:
    """A coarse lattice without refinement, so repeated searches share one ball set."""
    lower, upper = box
    limits = [0.5 * (hi - lo) for lo, hi in zip(lower, upper)]
    radius_max = min(0.9, 0.95 * radius_fitting(a, limits))
    return BallSearchDomain.lattice(
        lower,
        upper,
        a,
        min(radius_min, radius_max),
        radius_max,
        centers_per_axis=centers_per_axis,
        n_radii=n_radii,
        refinement_rounds=0,
    )


def random_atom_params(rng: np.random.Generator, a: AnisotropyVector, r: Optional[float] = None) -> AtomParams:
    """p in [0.6, 1]^n and s at most one above s_min, so suite balls resolve P_s."""
    p = random_exponent(rng, a.n, 0.6, 1.0)
    s = min(s_min(a, p) + int(rng.integers(0, 2)), MAX_ATOM_DEGREE)
    if r is None:
        r = ATOM_R_CHOICES[int(rng.integers(len(ATOM_R_CHOICES)))]
    return AtomParams(p=p, r=r, s=s)


def random_atom(
    rng: np.random.Generator,
    f: GridFunction,
    a: AnisotropyVector,
    params: AtomParams,
    tolerances: ToleranceConfig,
) -> Atom:
    """An atom made from f on a random ball inside f's box."""
    ball = random_ball(rng, a, f.box)
    return make_atom(f, ball, params, tolerances=tolerances)


def sign_atom(resolution: Sequence[int], tolerances: ToleranceConfig) -> Atom:
    """The atom made from sign(x) on B = [-1, 1] with p = 1, r = inf, s = 0; it equals sign(x)/2."""
    a = AnisotropyVector.isotropic(1)
    ball = AnisotropicBall(center=(0.0,), radius=1.0, anisotropy=a)
    f = sample(FunctionFamily(kind=FamilyKind.SIGN_STEP), unit_box(1), resolution)
    params = AtomParams(p=ExponentVector.of(1.0), r=math.inf, s=0)
    return make_atom(f, ball, params, tolerances=tolerances)
