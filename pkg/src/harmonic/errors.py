"""Exception types shared across the package."""

from __future__ import annotations


class HarmonicError(Exception):
    """Base class for domain errors (CLI exit status 1)."""


class PreconditionError(HarmonicError, ValueError):
    """An operation was called outside its documented domain."""


class IndexRangeError(PreconditionError):
    """A word at some level uses a generator index outside the allowed range."""

    def __init__(self, message: str, level: int | None = None) -> None:
        super().__init__(message)
        self.level = level


class MultiplicityViolation(HarmonicError):
    """Declared multiplicity metadata is contradicted by a computed projection."""


class DSLSyntaxError(ValueError):
    """Malformed word expression. ``position`` is 1-based."""

    def __init__(self, position: int, expected: str, text: str = "", line: int | None = None) -> None:
        self.position = position
        self.expected = expected
        self.text = text
        self.line = line
        where = f"line {line}, column {position}" if line is not None else f"position {position}"
        super().__init__(f"syntax error at {where}: expected {expected}")
