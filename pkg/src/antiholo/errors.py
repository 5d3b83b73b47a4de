"""Exception types shared across the package."""

from .arith import ArithmeticDomainError


class InputError(ValueError):
    """Caller supplied data that violates an operation's preconditions."""


class InvariantError(AssertionError):
    """An internal consistency check failed; indicates a bug or a false identity."""


class SearchExhausted(RuntimeError):
    """A bounded search ran out of candidates."""

    def __init__(self, msg, bound=None):
        super().__init__(msg if bound is None else f"{msg} (bound {bound})")
        self.bound = bound


class NotInImage(ValueError):
    """The matrix is not of the form phi(h)."""


__all__ = ["ArithmeticDomainError", "InputError", "InvariantError", "SearchExhausted", "NotInImage"]
