"""Exception types shared across the package."""


class RandConesError(Exception):
    """Base class for all randcones errors."""


class InvalidInputError(RandConesError, ValueError):
    """Arguments violate a documented precondition (dimension, range, shape)."""


class DegenerateInputError(RandConesError, ValueError):
    """Numerically rank-deficient or singular input where full rank is required."""


class BudgetExceededError(RandConesError):
    """An enumeration would exceed its documented subset-count budget."""


class UnboundedProblemError(RandConesError):
    """Linear program is unbounded in the optimization direction."""


class UnsupportedCaseError(RandConesError):
    """Parameter combination outside the implemented closed-form range."""
