"""Exception hierarchy; every error knows the CLI exit code it maps to."""

from typing import Any, Dict, Optional


EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


class AnisoDualityError(Exception):
    """Base class for all package errors."""

    exit_code: int = EXIT_NUMERICAL


class InvalidInputError(AnisoDualityError, ValueError):
    """Malformed or non-finite input."""

    exit_code = EXIT_USAGE


class GridFormatError(InvalidInputError):
    """A CSV grid or grid description could not be parsed."""


class IncompatibleParametersError(InvalidInputError):
    """Objects that must share parameters do not."""


class DomainError(InvalidInputError):
    """A requested ball or domain does not fit the data."""


class DegenerateDomainError(AnisoDualityError):
    """An intersection or support is empty."""


class DegenerateInputError(AnisoDualityError):
    """The input carries no information for the requested operation."""


class InsufficientNodesError(AnisoDualityError):
    """Too few quadrature nodes inside a ball to resolve a polynomial space."""


class ConditioningError(AnisoDualityError):
    """A Gram matrix stayed singular after the eigenvalue-floor fallback."""


class SamplingError(AnisoDualityError):
    """Random sampling produced only degenerate samples."""


class SearchError(AnisoDualityError):
    """Too many balls failed during a supremum search."""


class ConvergenceError(AnisoDualityError):
    """An iterative solver did not converge."""

    def __init__(self, message: str, diagnostics: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics: Dict[str, Any] = dict(diagnostics or {})

    def __str__(self) -> str:
        base = super().__str__()
        if not self.diagnostics:
            return base
        details = ", ".join(f"{k}={v}" for k, v in sorted(self.diagnostics.items()))
        return f"{base} ({details})"
