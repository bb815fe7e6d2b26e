"""Exception hierarchy shared by all modules."""


class LojexpError(Exception):
    """Base class for errors raised by this package."""


class PolynomialSyntaxError(LojexpError, ValueError):
    """Raised when polynomial text cannot be parsed.

    ``position`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        if text:
            pointer = " " * position + "^"
            message = f"{message} at position {position}\n  {text}\n  {pointer}"
        super().__init__(message)


class WeightError(LojexpError, ValueError):
    """No admissible weight system, or a supplied one does not fit."""


class HypothesisError(LojexpError):
    """A theorem hypothesis (e.g. isolatedness) is known to fail."""


class BudgetExceeded(LojexpError, RuntimeError):
    """A resource cap was hit; the result is indeterminate, not wrong."""


class InconsistentResult(LojexpError, AssertionError):
    """Two independent computations of the same quantity disagree."""
