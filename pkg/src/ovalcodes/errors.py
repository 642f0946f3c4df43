"""Exception types shared across the package."""


class FamilyError(ValueError):
    """Polynomial family not applicable at this m, or parameters invalid."""


class BudgetExceededError(RuntimeError):
    """An exhaustive computation would exceed the configured work budget."""


class CodeFormatError(ValueError):
    """A code file or weight distribution failed validation."""


class PairingViolationError(AssertionError):
    """Min-weight support pairing failed; signals an upstream bug."""


class HypothesisError(ValueError):
    """A verification was requested outside the hypotheses it needs."""
