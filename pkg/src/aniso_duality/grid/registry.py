"""Family registry for discovery by kind."""

from typing import Dict, List

from ..core import FamilyKind, InvalidInputError
from .families import BaseFamily


class FamilyRegistry:
    """Lightweight registry for analytic function families."""

    def __init__(self):
        """Initialize empty registry."""
        self._families: Dict[FamilyKind, BaseFamily] = {}

    def register_family(self, family: BaseFamily) -> None:
        """
        Register a family.

        Args:
            family: Family instance to register
        """
        if not isinstance(family, BaseFamily):
            raise TypeError(f"Family must be instance of BaseFamily, got {type(family)}")

        # Avoid duplicates (by kind)
        if family.kind in self._families:
            return

        self._families[family.kind] = family

    def get_family(self, kind: FamilyKind) -> BaseFamily:
        """
        Look up a registered family.

        Raises:
            InvalidInputError: If no family is registered for kind
        """
        if kind not in self._families:
            raise InvalidInputError(f"no family registered for kind {kind.value!r}")
        return self._families[kind]

    def get_families(self) -> List[BaseFamily]:
        return list(self._families.values())

    def clear_registry_for_tests(self) -> None:
        """Clear registry (for testing only)."""
        self._families.clear()

    def register_default_families(self) -> None:
        """
        Register the built-in analytic families.

        This function is idempotent - can be called multiple times safely.
        """
        from .families import (
            BoxIndicatorFamily,
            GaussianBumpFamily,
            RadialPowerFamily,
            RandomPolynomialFamily,
            SignStepFamily,
            TrigMixtureFamily,
        )

        self.clear_registry_for_tests()
        for family in (
            GaussianBumpFamily(),
            RandomPolynomialFamily(),
            SignStepFamily(),
            TrigMixtureFamily(),
            BoxIndicatorFamily(),
            RadialPowerFamily(),
        ):
            self.register_family(family)


# Global registry instance
_registry = FamilyRegistry()
_registry.register_default_families()


def register_family(family: BaseFamily) -> None:
    """Register a family in the global registry."""
    _registry.register_family(family)


def get_family(kind: FamilyKind) -> BaseFamily:
    """Get the registered family for kind."""
    return _registry.get_family(kind)


def get_families() -> List[BaseFamily]:
    """Get all registered families."""
    return _registry.get_families()


def clear_registry_for_tests() -> None:
    """Clear registry (for testing only)."""
    _registry.clear_registry_for_tests()


def register_default_families() -> None:
    """Register default families (idempotent)."""
    _registry.register_default_families()
