"""Exception hierarchy shared by every granula module."""

from __future__ import annotations


class GranulaError(Exception):
    """Base class for all library errors."""


class OverlapError(GranulaError):
    """Two blocks of a granule share an element."""


class EmptyBlockError(GranulaError):
    """A granule was given an empty block."""


class UnknownElementError(GranulaError, KeyError):
    """An element name or index does not belong to the universe."""

    def __str__(self) -> str:
        return Exception.__str__(self)


class NotEquivalenceError(GranulaError):
    """A relation is not reflexive on its field, symmetric and transitive."""


class UniverseMismatchError(GranulaError):
    """Operands live on different universes."""


class CapExceededError(GranulaError):
    """An enumeration would exceed its configured size cap."""


class NoBoundError(GranulaError):
    """A lattice bound does not exist in the searched family."""

    def __init__(self, message: str, side: str = ""):
        super().__init__(message)
        self.side = side


class NoAttributesError(GranulaError):
    """An information system has no attributes."""


class IncompleteSystemError(GranulaError):
    """An operation that needs a complete system got an incomplete one."""


class ParseError(GranulaError, ValueError):
    """Malformed text or table input, with an optional position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.line = line
        self.column = column


class DuplicateObjectError(GranulaError):
    """Two table rows carry the same object name."""


class EmptyTableError(GranulaError):
    """A table has no rows or no attribute columns."""
