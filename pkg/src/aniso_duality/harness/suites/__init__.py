"""Built-in verification suites, one per library module."""

from .atoms import AtomsSuite
from .campanato import CampanatoSuite
from .duality import DualitySuite
from .geometry import GeometrySuite
from .norms import NormsSuite
from .projection import ProjectionSuite

__all__ = [
    "GeometrySuite",
    "NormsSuite",
    "ProjectionSuite",
    "AtomsSuite",
    "CampanatoSuite",
    "DualitySuite",
]
