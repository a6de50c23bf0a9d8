class ClearLabError(ValueError):
    """Root of every error raised on purpose by clearlab."""


class DescriptorError(ClearLabError):
    """A ring descriptor or an element literal could not be understood."""

    def __init__(self, message: str, text: str | None = None, position: int | None = None):
        self.text = text
        self.position = position
        if text is not None and position is not None:
            pointer = " " * position + "^"
            message = f"{message} at position {position}\n  {text}\n  {pointer}"
        super().__init__(message)


class InfiniteRingError(ClearLabError):
    def __init__(self, descriptor: str):
        self.descriptor = descriptor
        super().__init__(f"infinite ring: {descriptor} cannot be enumerated")


class UnsupportedRingError(ClearLabError):
    pass


class RingMismatchError(ClearLabError):
    pass


class NotFullError(ClearLabError):
    """Raised when a matrix generates a proper two-sided ideal."""

    def __init__(self, matrix_text: str, gcd_text: str):
        self.gcd_text = gcd_text
        super().__init__(f"not full: {matrix_text} has gcd of entries {gcd_text}, which is not a unit")


class BudgetExceededError(ClearLabError):
    def __init__(self, descriptor: str, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(f"{descriptor} has {required} elements, budget is {budget}; raise the budget to at least {required}")


class WitnessValidationError(ClearLabError):
    pass


class ImplicationViolationError(ClearLabError):
    pass


class ConfigError(ClearLabError):
    """clearlab_config.json or an environment override could not be used."""


class UsageError(ClearLabError):
    """Command-line arguments that do not form a valid invocation."""
