"""syscard: accountability-benchmark registry, audit validation, and
system-card rendering for automated decision systems."""
from __future__ import annotations

__version__ = "0.1.0"

from .audit import (
    NOT_APPLICABLE,
    NOT_EVALUATED,
    AuditDocument,
    AuditInfo,
    BenchmarkRef,
    Entry,
    Outcome,
    OutcomeScale,
    OutcomeState,
    SystemInfo,
    parse_audit,
    scaffold_audit,
    serialize_audit,
)
from .benchmark import (
    Aspect,
    Benchmark,
    Category,
    Criterion,
    canonical_benchmark,
    cell_criteria,
    format_code,
    load_benchmark,
    serialize_benchmark,
)
from .errors import (
    BenchmarkMismatchError,
    InvalidDocumentError,
    ParseError,
    SchemaError,
    SyscardError,
)
from .layout import Arc, CardLayout, Color, color_for, layout
from .report import AuditDiff, SummaryReport, diff, render_diff, render_summary, summarize
from .svg import render_svg
from .validation import Finding, Severity, ValidationReport, validate

__all__ = [
    "__version__",
    "Aspect",
    "Category",
    "Criterion",
    "Benchmark",
    "canonical_benchmark",
    "cell_criteria",
    "format_code",
    "load_benchmark",
    "serialize_benchmark",
    "OutcomeScale",
    "OutcomeState",
    "Outcome",
    "NOT_EVALUATED",
    "NOT_APPLICABLE",
    "Entry",
    "SystemInfo",
    "AuditInfo",
    "BenchmarkRef",
    "AuditDocument",
    "parse_audit",
    "serialize_audit",
    "scaffold_audit",
    "Severity",
    "Finding",
    "ValidationReport",
    "validate",
    "Color",
    "Arc",
    "CardLayout",
    "color_for",
    "layout",
    "render_svg",
    "SummaryReport",
    "summarize",
    "render_summary",
    "AuditDiff",
    "diff",
    "render_diff",
    "SyscardError",
    "ParseError",
    "SchemaError",
    "InvalidDocumentError",
    "BenchmarkMismatchError",
]
