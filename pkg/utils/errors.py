"""Exception hierarchy for the LSCVT toolkit.

Each error carries the process exit code the CLI reports for it.
"""


class LscvtError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class InvalidArgumentError(LscvtError, ValueError):
    """An argument violates an operation's precondition."""

    exit_code = 2


class ResourceLimitError(LscvtError):
    """A request exceeds a configured size cap."""


class DegenerateInputError(LscvtError, ValueError):
    """Input is well-formed but carries nothing to compute on (e.g. an empty mask)."""


class ArithmeticOverflowError(LscvtError, OverflowError):
    """A result does not fit the fixed machine word."""
