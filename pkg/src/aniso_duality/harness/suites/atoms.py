"""Atom construction, independent validation and the l1 lower bound."""

from typing import List, Optional

import numpy as np

from ...atoms import AtomicCombination, l1_lower_bound_check, validate_atom
from ...core import HarnessConfig, PropertyName, SuiteName
from ...duality import pairing
from ..base import BaseSuite, CaseOutcome, PropertyBlock, from_check, outcome
from ..generators import (
    polynomial_function,
    random_anisotropy,
    random_atom,
    random_atom_params,
    random_function,
    random_polynomial,
    sign_atom,
    suite_resolution,
    unit_box,
)


MAX_COMBINATION = 8


def random_combination(
    rng: np.random.Generator,
    config: HarnessConfig,
    size: Optional[int] = None,
) -> AtomicCombination:
    """Atoms cut from one trig mixture on [-1, 1]^n, with log-uniform coefficients of random sign."""
    n = int(rng.integers(1, 3))
    a = random_anisotropy(rng, n)
    params = random_atom_params(rng, a)
    f = random_function(rng, unit_box(n), suite_resolution(n))
    tolerances = config.effective_tolerances()
    if size is None:
        size = int(rng.integers(1, MAX_COMBINATION + 1))
    atoms = tuple(random_atom(rng, f, a, params, tolerances) for _ in range(size))
    lambdas = rng.standard_normal(size) * 10.0 ** rng.uniform(-1.0, 1.0, size)
    return AtomicCombination(atoms, tuple(float(lam) for lam in lambdas))


def _validation(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    tolerances = config.effective_tolerances()
    n = int(rng.integers(1, 3))
    a = random_anisotropy(rng, n)
    params = random_atom_params(rng, a)
    f = random_function(rng, unit_box(n), suite_resolution(n))
    record = validate_atom(random_atom(rng, f, a, params, tolerances), tolerances)
    return outcome(
        record.size_ratio,
        1.0 + tolerances.atom_size,
        passed=record.passed,
        resolution=f.resolution,
        detail=f"s={params.s}, r={params.r}, moments={record.moment_residual:.2e}, leak={record.support_leak:.2e}",
    )


def _sign_atom(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    resolution = config.grid.resolution(1)
    atom = sign_atom(resolution, config.effective_tolerances())
    expected = 0.5 * np.sign(atom.function.grid.coords[0])
    lhs = float(np.max(np.abs(atom.function.values - expected)))
    return outcome(lhs, config.effective_tolerances().sign_atom, resolution=resolution)


def _l1_lower_bound(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    c = random_combination(rng, config)
    resolution = config.grid.resolution(c.n)
    return from_check(l1_lower_bound_check(c, config.effective_tolerances(), resolution), resolution)


def _single_atom_equality(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """A single atom makes the l1 bound an equality."""
    c = random_combination(rng, config, size=1)
    resolution = config.grid.resolution(c.n)
    check = l1_lower_bound_check(c, config.effective_tolerances(), resolution)
    lhs = abs(check.rhs / check.lhs - 1.0)
    return outcome(lhs, config.effective_tolerances().grid, resolution=resolution)


def _polynomial_pairing(rng: np.random.Generator, config: HarnessConfig) -> CaseOutcome:
    """|<a, P>| <= moment residual * ||a||_1 * sum |c_alpha| for P in P_s."""
    c = random_combination(rng, config, size=1)
    atom = c.atoms[0]
    poly = random_polynomial(rng, atom.ball, atom.params.s)
    grid = atom.function.grid
    lhs = abs(pairing(atom.function, polynomial_function(poly, grid)))
    l1 = float(np.sum(np.abs(atom.function.values)) * grid.cell_weight)
    rhs = config.effective_tolerances().atom_moment * l1 * float(np.sum(np.abs(poly.coefficients)))
    return outcome(lhs, rhs, resolution=grid.resolution)


class AtomsSuite(BaseSuite):
    """(p, r, s)-atoms and finite atomic combinations."""

    @property
    def name(self) -> SuiteName:
        return SuiteName.ATOMS

    def blocks(self, config: HarnessConfig) -> List[PropertyBlock]:
        counts = config.suites
        return [
            PropertyBlock(PropertyName("validation"), "make_atom", counts.atoms, _validation),
            PropertyBlock(PropertyName("sign_atom"), "make_atom", 1, _sign_atom),
            PropertyBlock(PropertyName("l1_lower_bound"), "l1_lower_bound_check", counts.l1_lower_bound, _l1_lower_bound),
            PropertyBlock(
                PropertyName("single_atom_equality"), "l1_lower_bound_check", counts.equality, _single_atom_equality
            ),
            PropertyBlock(
                PropertyName("polynomial_pairing"), "pairing", counts.polynomial_pairing, _polynomial_pairing
            ),
        ]
