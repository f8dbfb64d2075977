"""Exception types shared across the toolkit."""
from __future__ import annotations


class SyscardError(Exception):
    """Base class for all syscard errors."""


class ParseError(SyscardError):
    """A document is not well-formed (bad JSON, wrong shape, wrong types)."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SchemaError(SyscardError):
    """A document parses but violates a schema invariant (duplicate code,
    out-of-scale value, code/position mismatch, ...)."""


class InvalidDocumentError(SyscardError):
    """An operation refused an audit document because validating it against
    the benchmark produced errors. Carries the validation report."""

    def __init__(self, message: str, report):
        super().__init__(message)
        self.report = report


class BenchmarkMismatchError(SyscardError):
    """Two documents cannot be compared because they reference different
    benchmarks."""
