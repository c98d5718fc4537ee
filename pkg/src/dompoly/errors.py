"""Exception types shared across the package."""


class BudgetExceededError(RuntimeError):
    """Raised when an exact enumeration would exceed the configured vertex budget."""


class InterpolationError(ValueError):
    """Raised when interpolation nodes collide or the data is not integral."""


class EvaluationOverflowError(OverflowError):
    """Raised when floating evaluation cannot represent the coefficients."""
