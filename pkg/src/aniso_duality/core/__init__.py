"""Core models and utilities for anisotropic duality computations."""

from .config import DEFAULT_CONFIG, HarnessConfig, config_digest, load_config
from .enums import BasisFactorization, FamilyKind, SolverMethod, SuiteName
from .errors import (
    AnisoDualityError,
    ConditioningError,
    ConvergenceError,
    DegenerateDomainError,
    DegenerateInputError,
    DomainError,
    GridFormatError,
    IncompatibleParametersError,
    InsufficientNodesError,
    InvalidInputError,
    SamplingError,
    SearchError,
)
from .ids import CaseID, PropertyName
from .models import (
    AnisotropicBall,
    AnisotropyVector,
    AtomParams,
    BallScore,
    BallSearchDomain,
    CampanatoParams,
    CampanatoResult,
    ExponentVector,
    FunctionFamily,
    InequalityCheck,
    ValidationRecord,
    unit_ball_volume,
)
from .time import utc_now, utc_stamp
from .validation import (
    conjugate_exponent,
    require_finite,
    require_positive,
)

__all__ = [
    # Config
    "HarnessConfig",
    "DEFAULT_CONFIG",
    "load_config",
    "config_digest",
    # Enums
    "FamilyKind",
    "SuiteName",
    "SolverMethod",
    "BasisFactorization",
    # Errors
    "AnisoDualityError",
    "InvalidInputError",
    "GridFormatError",
    "IncompatibleParametersError",
    "DomainError",
    "DegenerateDomainError",
    "DegenerateInputError",
    "InsufficientNodesError",
    "ConditioningError",
    "ConvergenceError",
    "SamplingError",
    "SearchError",
    # IDs
    "CaseID",
    "PropertyName",
    # Models
    "AnisotropyVector",
    "ExponentVector",
    "AnisotropicBall",
    "FunctionFamily",
    "AtomParams",
    "CampanatoParams",
    "BallSearchDomain",
    "ValidationRecord",
    "InequalityCheck",
    "BallScore",
    "CampanatoResult",
    "unit_ball_volume",
    # Time utilities
    "utc_now",
    "utc_stamp",
    # Validation
    "require_finite",
    "require_positive",
    "conjugate_exponent",
]
