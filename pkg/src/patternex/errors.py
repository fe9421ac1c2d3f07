"""Exception hierarchy shared across the package.

The CLI maps these onto its stable exit codes: invalid input is 2,
capacity limits are 3, failed re-checks are 4.
"""


class PatternexError(Exception):
    """Base class for all package-specific errors."""


class InputError(PatternexError, ValueError):
    """An argument, file, or combination of parameters is invalid."""


class CapacityError(PatternexError, RuntimeError):
    """The requested instance exceeds the configured enumeration limits."""


class PostconditionError(PatternexError, RuntimeError):
    """A mechanically re-checked guarantee of a construction or solver failed."""


class ConsistencyError(PostconditionError):
    """Two independent computations of the same fact disagreed."""
