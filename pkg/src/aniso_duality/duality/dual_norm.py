"""Empirical dual norm on L^r_0(B) and the extremal atom that attains it."""

import logging
import math
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from ..atoms import DEGENERATE_MESSAGE, Atom, make_atom
from ..campanato import best_poly_error
from ..core import (
    DEFAULT_CONFIG,
    AnisotropicBall,
    AtomParams,
    ConvergenceError,
    DegenerateInputError,
    HarnessConfig,
    InequalityCheck,
    InvalidInputError,
    SamplingError,
    conjugate_exponent,
)
from ..grid import GridFunction
from ..polyproj import (
    OrthonormalBasis,
    build_basis,
    in_ball_values,
    multi_indices,
    project_values,
    vandermonde,
)
from .bounds import single_ball_bound


_logger = logging.getLogger(__name__)

DEGENERATE_SAMPLE_RATIO = 1e-12
MAX_STEP_CUTS = 4
MAX_WAVES = 4


def _lr(values: np.ndarray, weight: float, r: float) -> float:
    magnitude = np.abs(values)
    if math.isinf(r):
        return float(magnitude.max())
    return float(np.sum(magnitude ** r) * weight) ** (1.0 / r)


def _residual_dual(
    g: GridFunction,
    ball: AnisotropicBall,
    r_dual: float,
    s: int,
    basis: OrthonormalBasis,
    config: HarnessConfig,
) -> Optional[np.ndarray]:
    """sign(e) |e|^{r'-1} on the in-ball nodes, e = g - P* the best L^{r'} residual; None if g is in P_s."""
    approximation = best_poly_error(g, ball, r_dual, s, basis=basis, config=config.solver)
    y = in_ball_values(g, basis)
    if approximation.error <= DEGENERATE_SAMPLE_RATIO * float(np.max(np.abs(y), initial=0.0)):
        return None
    residual = y - basis.in_ball_values(approximation.polynomial)
    return np.sign(residual) * np.abs(residual) ** (r_dual - 1.0)


def _polynomial_draw(rng: np.random.Generator, design: np.ndarray) -> np.ndarray:
    return design @ rng.standard_normal(design.shape[1])


def _node_draw(rng: np.random.Generator, u: List[np.ndarray]) -> np.ndarray:
    return rng.standard_normal(u[0].size)


def _step_draw(rng: np.random.Generator, u: List[np.ndarray]) -> np.ndarray:
    """Random levels on a random tensor partition of the ball's box."""
    index = np.zeros(u[0].size, dtype=np.int64)
    cells = 1
    for axis in u:
        cuts = np.sort(rng.uniform(-1.0, 1.0, int(rng.integers(1, MAX_STEP_CUTS + 1))))
        index = index * (cuts.size + 1) + np.searchsorted(cuts, axis)
        cells *= cuts.size + 1
    return rng.standard_normal(cells)[index]


def _wave_draw(rng: np.random.Generator, u: List[np.ndarray], max_frequency: float) -> np.ndarray:
    """Sum of plane waves with log-uniform frequencies up to max_frequency."""
    values = np.zeros(u[0].size)
    for _ in range(int(rng.integers(1, MAX_WAVES + 1))):
        frequency = max_frequency ** rng.uniform(0.0, 1.0, len(u))
        phase = rng.uniform(0.0, 2.0 * math.pi)
        argument = phase + math.pi * sum(k * axis for k, axis in zip(frequency, u))
        values += rng.standard_normal() * np.cos(argument)
    return values


def _perturbed_draw(rng: np.random.Generator, direction: np.ndarray) -> np.ndarray:
    scale = float(np.sqrt(np.mean(direction ** 2))) * 10.0 ** rng.uniform(-3.0, 0.0)
    return direction + scale * rng.standard_normal(direction.size)


def dual_norm_on_ball(
    g: GridFunction,
    ball: AnisotropicBall,
    r: float,
    s: int,
    samples: int,
    seed: int = 0,
    extra_degree: int = 3,
    config: Optional[HarnessConfig] = None,
    seed_extremal: bool = True,
) -> float:
    """
    max |<f, g>| over random f in L^r_0(B) with ||f||_{L^r(B)} = 1.

    Draws cycle through polynomials of degree s + extra_degree, i.i.d. node
    values, random step functions and random plane-wave mixtures, all at the
    grid's own resolution. With seed_extremal the dual direction of the best
    L^{r'} residual is evaluated first and its random perturbations join the
    cycle. Each draw has its P_s projection removed. Draws come from one
    generator in a fixed order, so a larger sample count never lowers the
    value.

    Raises:
        SamplingError: If every sample projects to (numerically) zero
    """
    if math.isnan(r) or r <= 1.0:
        raise InvalidInputError(f"r must lie in (1, inf], got {r}")
    config = config or DEFAULT_CONFIG
    basis = build_basis(ball, s, grid=g.grid)
    y = in_ball_values(g, basis)
    coords = [axis[basis.mask] for axis in basis.grid.coords]
    u = [(c - x0) / h for c, x0, h in zip(coords, ball.center, ball.half_widths)]
    design = vandermonde(u, multi_indices(ball.n, s + extra_degree))
    max_frequency = max(1.0, 0.5 * y.size ** (1.0 / ball.n))

    direction = None
    if seed_extremal:
        try:
            direction = _residual_dual(g, ball, conjugate_exponent(r), s, basis, config)
        except ConvergenceError as e:
            _logger.debug("no extremal direction for r=%s: %s", r, e)

    rng = np.random.default_rng(seed)
    draws: List[Callable[[], np.ndarray]] = [
        lambda: _polynomial_draw(rng, design),
        lambda: _node_draw(rng, u),
        lambda: _step_draw(rng, u),
        lambda: _wave_draw(rng, u, max_frequency),
    ]
    if direction is not None:
        draws.append(lambda: _perturbed_draw(rng, direction))

    best, usable = 0.0, 0

    def consider(f: np.ndarray) -> None:
        nonlocal best, usable
        f0 = f - basis.design @ project_values(f, basis)
        f_norm = _lr(f, basis.weight, r)
        norm = _lr(f0, basis.weight, r)
        if f_norm == 0.0 or norm <= DEGENERATE_SAMPLE_RATIO * f_norm:
            return
        usable += 1
        best = max(best, abs(float(np.sum(f0 * y)) * basis.weight) / norm)

    if direction is not None:
        consider(direction)
    for k in range(samples):
        consider(draws[k % len(draws)]())
    if usable == 0:
        raise SamplingError(f"all {samples} samples were degenerate")
    _logger.debug("dual norm %.6g from %d of %d samples", best, usable, samples)
    return best


@dataclass(frozen=True)
class ExtremalAtom:
    """Atom built from the dual of the best L^{r'} error, and how tight it is."""

    atom: Atom
    bound: InequalityCheck
    ratio: float
    sharp: bool


def extremal_atom(
    g: GridFunction,
    ball: AnisotropicBall,
    params: AtomParams,
    config: Optional[HarnessConfig] = None,
) -> ExtremalAtom:
    """
    Atom from f = sign(e) |e|^{r'-1}, e = g - P* with P* the best L^{r'} fit.

    For finite r' the optimality of P* makes f moment free, so the pairing
    bound is attained: the lhs/rhs ratio of single_ball_bound approaches 1.

    Raises:
        DegenerateInputError: If g is a polynomial on the ball
    """
    config = config or DEFAULT_CONFIG
    tolerances = config.effective_tolerances()
    r_dual = conjugate_exponent(params.r)
    basis = build_basis(ball, params.s, grid=g.grid)
    dual = _residual_dual(g, ball, r_dual, params.s, basis, config)
    if dual is None:
        raise DegenerateInputError(DEGENERATE_MESSAGE)

    values = np.zeros(basis.grid.shape)
    values[basis.mask] = dual
    atom = make_atom(GridFunction(basis.grid, values), ball, params, tolerances=tolerances)

    bound = single_ball_bound(atom, g, config)
    ratio = bound.lhs / bound.rhs if bound.rhs > 0.0 else 0.0
    sharp = 1.0 - tolerances.sharpness <= ratio <= 1.0 + tolerances.single_ball
    return ExtremalAtom(atom=atom, bound=bound, ratio=ratio, sharp=sharp)
