"""Exception hierarchy shared by every module."""

from __future__ import annotations

INT64_MAX = 2**63 - 1


class RadialIndexError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(RadialIndexError, ValueError):
    """Malformed poset, complex or table (cycles, missing faces, ...)."""


class DomainError(RadialIndexError, ValueError):
    """An argument lies outside the domain of an operation."""


class NonIsolatedError(DomainError):
    """The Jacobian quotient did not stabilise within the truncation budget."""


class IntegerOverflowError(RadialIndexError, OverflowError):
    """A checked integer left the signed 64-bit range."""


def checked(value: int) -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise IntegerOverflowError(f"integer {value} exceeds the signed 64-bit range")
    return value
