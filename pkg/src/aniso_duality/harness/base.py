"""Base interface for verification suites."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..core import HarnessConfig, InequalityCheck, PropertyName, SuiteName


@dataclass(frozen=True)
class CaseOutcome:
    """One verified inequality and the lattice it was measured on."""

    check: InequalityCheck
    resolution: Optional[Tuple[int, ...]] = None


CaseFunction = Callable[[np.random.Generator, HarnessConfig], CaseOutcome]


@dataclass(frozen=True)
class PropertyBlock:
    """
    A named property checked on count random cases.

    case receives a generator seeded per case and the harness config.
    """

    name: PropertyName
    op: str
    count: int
    case: CaseFunction


def outcome(
    lhs: float,
    rhs: float,
    passed: Optional[bool] = None,
    resolution: Optional[Tuple[int, ...]] = None,
    detail: Optional[str] = None,
) -> CaseOutcome:
    """Wrap lhs <= rhs (or an explicit verdict) as a CaseOutcome."""
    if passed is None:
        passed = bool(lhs <= rhs)
    check = InequalityCheck(lhs=float(lhs), rhs=float(rhs), passed=passed, detail=detail)
    return CaseOutcome(check=check, resolution=resolution)


def from_check(check: InequalityCheck, resolution: Optional[Tuple[int, ...]] = None) -> CaseOutcome:
    return CaseOutcome(check=check, resolution=resolution)


class BaseSuite(ABC):
    """
    Base interface for all verification suites.

    Each suite must expose:
    - name: SuiteName enum
    - blocks(config) -> list[PropertyBlock]
    """

    @property
    @abstractmethod
    def name(self) -> SuiteName:
        """Return the name of this suite."""
        pass

    @abstractmethod
    def blocks(self, config: HarnessConfig) -> List[PropertyBlock]:
        """
        Property blocks of this suite, in report order.

        Args:
            config: Harness configuration (case counts and tolerances)

        Returns:
            List of PropertyBlock objects
        """
        pass
