"""Exception types shared across the package."""


class BudgetExceeded(ValueError):
    """An exact computation would exceed the configured enumeration budget.

    The ``required`` attribute carries the size the computation would need.
    """

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class InvalidPathError(ValueError):
    """A sequence of record words is not a path of the branching graph."""


class ConditioningError(ValueError):
    """A conditioning event has probability zero."""


class InsufficientPrefixError(ValueError):
    """An order prefix is too short to determine the requested projection."""


class NormalizationError(ValueError):
    """Probabilities do not sum to one."""
