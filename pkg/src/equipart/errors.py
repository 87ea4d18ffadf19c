"""Exception types shared across the package."""

from __future__ import annotations


class EquipartError(Exception):
    """Base class for every error raised by equipart."""


class InvalidArgument(EquipartError, ValueError):
    pass


class PreconditionViolation(EquipartError, ValueError):
    pass


class NoPartition(EquipartError, ValueError):
    """A requested q-partition does not exist."""


class UnsupportedInstance(EquipartError, ValueError):
    pass


class BudgetExceeded(EquipartError, RuntimeError):
    """Instance too large for an exhaustive oracle."""


class ParseError(EquipartError, ValueError):
    pass
