"""Near-MDS codes from oval polynomials over GF(2^m)."""

from .errors import (
    BudgetExceededError,
    CodeFormatError,
    FamilyError,
    HypothesisError,
    PairingViolationError,
)
from .gf2m import ExtFieldCtx, Fe, FieldCtx, ext_field_new, field_new

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CodeFormatError",
    "ExtFieldCtx",
    "FamilyError",
    "Fe",
    "FieldCtx",
    "HypothesisError",
    "PairingViolationError",
    "ext_field_new",
    "field_new",
    "__version__",
]
