"""Strict enums for duality models."""

from enum import Enum


class FamilyKind(str, Enum):
    """Kinds of seeded test-function families."""

    GAUSSIAN_BUMP = "gaussian-bump"
    RANDOM_POLYNOMIAL = "random-polynomial"
    SIGN_STEP = "sign-step"
    TRIG_MIXTURE = "trig-mixture"
    CSV_IMPORT = "csv-import"
    BOX_INDICATOR = "box-indicator"
    RADIAL_POWER = "radial-power"


class SuiteName(str, Enum):
    """Verification suites exposed by the harness."""

    GEOMETRY = "geometry"
    NORMS = "norms"
    PROJECTION = "projection"
    ATOMS = "atoms"
    CAMPANATO = "campanato"
    DUALITY = "duality"
    ALL = "all"


class SolverMethod(str, Enum):
    """How a best polynomial approximation was obtained."""

    PROJECTION = "projection"
    IRLS = "irls"
    LAWSON = "lawson"
    LINPROG = "linprog"


class BasisFactorization(str, Enum):
    """Factorization used to orthonormalize a Gram matrix."""

    CHOLESKY = "cholesky"
    EIGEN_FLOOR = "eigen-floor"
