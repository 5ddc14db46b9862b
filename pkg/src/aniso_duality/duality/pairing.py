"""The duality pairing L_g(f) = integral of f g."""

import numpy as np

from ..core import DegenerateDomainError, DomainError, IncompatibleParametersError
from ..grid import GridFunction, transfer


def pairing(f: GridFunction, g: GridFunction) -> float:
    """
    Midpoint quadrature of f g over the intersection of the two boxes.

    The quadrature runs on f's cells; g is sliced when the lattices align and
    interpolated otherwise.

    Raises:
        DomainError: If the boxes are disjoint
    """
    if f.n != g.n:
        raise IncompatibleParametersError(f"f lives in R^{f.n}, g in R^{g.n}")
    try:
        lower, upper = g.grid.intersect_box(f.grid.lower, f.grid.upper)
        sub, window = f.grid.crop_to_box(lower, upper)
    except DegenerateDomainError as exc:
        raise DomainError(f"disjoint domains: {f.box} and {g.box}") from exc
    g_values = transfer(g, sub).values
    return float(np.sum(f.values[window] * g_values) * sub.cell_weight)
