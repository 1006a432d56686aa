"""Exception types shared across the package."""


class ContextMismatchError(ValueError):
    """Operands belong to different fields or ambient dimensions."""


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


class InternalCheckError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


class FileFormatError(ValueError):
    """A point or sphere file failed header or body validation."""
