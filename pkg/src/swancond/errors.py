"""Exception types shared across the library.

Errors are split by who is at fault: ``InputError`` means the caller fed
malformed data (bad descriptor, non-prime characteristic), ``ContractError``
means an operation was invoked outside its documented precondition,
``PrecisionError`` means a truncated series does not determine the result,
and ``InvariantViolation`` means an internal consistency check failed and
indicates a bug.  Invariant violations are raised, never swallowed.
"""


class SwancondError(Exception):
    """Base class for all library errors."""


class InputError(SwancondError):
    """Malformed user input."""


class ContractError(SwancondError):
    """An operation was called outside its documented precondition."""


class ArithmeticDomainError(SwancondError, ZeroDivisionError):
    """Division by zero, inversion of zero, or a root that does not exist."""


class PrecisionError(SwancondError):
    """The known terms of a truncated series do not determine the result."""


class InvariantViolation(SwancondError):
    """An internal cross-check failed; this is a bug, not a data problem."""
