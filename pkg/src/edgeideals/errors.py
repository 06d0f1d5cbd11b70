"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Malformed input: bad index, violated construction precondition."""


class BudgetExceeded(RuntimeError):
    """An enumeration or linear-algebra bound was exceeded."""
