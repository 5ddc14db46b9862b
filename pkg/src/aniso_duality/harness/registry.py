"""Suite registry for discovery by name."""

from typing import Dict, List

from ..core import InvalidInputError, SuiteName
from .base import BaseSuite


class SuiteRegistry:
    """Lightweight registry for verification suites."""

    def __init__(self):
        """Initialize empty registry."""
        self._suites: Dict[SuiteName, BaseSuite] = {}

    def register_suite(self, suite: BaseSuite) -> None:
        """
        Register a suite.

        Args:
            suite: Suite instance to register
        """
        if not isinstance(suite, BaseSuite):
            raise TypeError(f"Suite must be instance of BaseSuite, got {type(suite)}")

        # Avoid duplicates (by name)
        if suite.name in self._suites:
            return

        self._suites[suite.name] = suite

    def get_suite(self, name: SuiteName) -> BaseSuite:
        """
        Raises:
            InvalidInputError: If no suite is registered under name
        """
        if name not in self._suites:
            raise InvalidInputError(f"no suite registered under {SuiteName(name).value!r}")
        return self._suites[name]

    def get_suites(self) -> List[BaseSuite]:
        """All registered suites in registration order."""
        return list(self._suites.values())

    def clear_registry_for_tests(self) -> None:
        """Clear registry (for testing only)."""
        self._suites.clear()

    def register_default_suites(self) -> None:
        """
        Register the built-in suites.

        This function is idempotent - can be called multiple times safely.
        """
        from .suites import (
            AtomsSuite,
            CampanatoSuite,
            DualitySuite,
            GeometrySuite,
            NormsSuite,
            ProjectionSuite,
        )

        for suite in (
            GeometrySuite(),
            NormsSuite(),
            ProjectionSuite(),
            AtomsSuite(),
            CampanatoSuite(),
            DualitySuite(),
        ):
            self.register_suite(suite)


# Global registry instance
_registry = SuiteRegistry()


def register_suite(suite: BaseSuite) -> None:
    """Register a suite in the global registry."""
    _registry.register_suite(suite)


def get_suite(name: SuiteName) -> BaseSuite:
    """Get the registered suite for name."""
    return _registry.get_suite(name)


def get_suites() -> List[BaseSuite]:
    """Get all registered suites."""
    return _registry.get_suites()


def clear_registry_for_tests() -> None:
    """Clear registry (for testing only)."""
    _registry.clear_registry_for_tests()


def register_default_suites() -> None:
    """Register default suites (idempotent)."""
    _registry.register_default_suites()
