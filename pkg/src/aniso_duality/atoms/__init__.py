"""Anisotropic mixed-norm atoms and finite atomic combinations."""

from .atom import (
    DEGENERATE_MESSAGE,
    Atom,
    check_atom_conditions,
    check_atom_params,
    make_atom,
    moment_residual,
    validate_atom,
)
from .combination import AtomicCombination, aggregate_norm, l1_lower_bound_check

__all__ = [
    "Atom",
    "DEGENERATE_MESSAGE",
    "make_atom",
    "validate_atom",
    "check_atom_conditions",
    "check_atom_params",
    "moment_residual",
    "AtomicCombination",
    "aggregate_norm",
    "l1_lower_bound_check",
]
