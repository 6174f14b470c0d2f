"""Exception taxonomy shared by every module.

UsageError covers caller mistakes (mismatched rings, bad arguments),
DomainError covers mathematically undefined requests (inverse of zero),
ParseError carries a character position, ResourceError signals that a
configured work budget was exceeded rather than that an answer is wrong.
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(AlgebraError):
    """The call itself is malformed: wrong ring, wrong grading, bad flag."""


class DomainError(AlgebraError):
    """The requested value does not exist (zero divisor, empty ideal, ...)."""


class ParseError(AlgebraError):
    """Rejected input text; `position` is a 0-based character offset."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ResourceError(AlgebraError):
    """A step budget or size cap was hit before the computation finished."""
