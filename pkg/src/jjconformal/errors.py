"""Error types shared across the package."""

from __future__ import annotations


class ShapeError(ValueError):
    """Structural problem: wrong dimensions, mismatched spaces, bad names."""


class PreconditionError(ValueError):
    """A mathematical precondition failed; carries the failing report."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class DslError(ValueError):
    """Parse or validation error in DSL text, with source position."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class ApiError(ValueError):
    """A command referenced the wrong kind of object or a bad property."""
