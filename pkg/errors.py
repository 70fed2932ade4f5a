"""
Exception hierarchy for the moduli classifier.

Library code raises these; only the command-line front end turns them into
exit codes (2 for bad input, 1 for verification failures).
"""


class ModuliError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(ModuliError, ValueError):
    """User-supplied data is malformed or violates a precondition."""


class ConsistencyError(ModuliError):
    """
    Two independent computations of the same quantity disagree, or a proven
    bound is violated. Seeing this means the implementation is wrong.
    """

    def __init__(self, message: str, counterexample: dict = None):
        super().__init__(message)
        self.counterexample = counterexample or {}


class UnsupportedModelError(ModuliError):
    """The local model lies outside the hypothesis a >= 2."""


class BudgetExceededError(ModuliError):
    """An exhaustive enumeration would exceed the configured budget."""
