class PlateauError(Exception):
    """Base class for every error raised by this package."""


class InvalidWord(PlateauError, ValueError):
    pass


class EmptyWord(PlateauError, ValueError):
    pass


class InvalidH(PlateauError, ValueError):
    pass


class TooFewWords(PlateauError, ValueError):
    pass


class TableMismatch(PlateauError, ValueError):
    pass


class ResourceLimit(PlateauError):
    """A hard size limit was hit; the CLI maps these to exit status 2."""


class TooLarge(ResourceLimit):
    pass


class MemoryBudgetExceeded(ResourceLimit):
    def __init__(self, required: int, budget: int):
        super().__init__(f"LCR tables need {required} bytes, budget is {budget} bytes")
        self.required = required
        self.budget = budget


class InvariantViolation(PlateauError, AssertionError):
    """Internal consistency check failed (CLI exit status 3)."""
