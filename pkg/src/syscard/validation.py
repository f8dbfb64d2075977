"""Validate an audit document against a benchmark.

Every problem becomes a finding; nothing raises. Errors mark data that can
never be right (unknown codes, out-of-scale values, stale benchmark refs);
incompleteness is a warning unless ``strict`` escalates it, so a half-done
audit still validates during the engagement but not at publication.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .audit import AuditDocument, OutcomeState
from .benchmark import Benchmark


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Finding:
    """One validation result. ``code`` identifies the rule that fired;
    ``criterion`` is the criterion code when one is involved."""

    severity: Severity
    code: str
    message: str
    criterion: str | None = None


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...]

    @property
    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity is Severity.ERROR)

    @property
    def warnings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity is Severity.WARNING)

    @property
    def is_valid(self) -> bool:
        return not self.errors


def _sort_key(finding: Finding):
    return (
        0 if finding.severity is Severity.ERROR else 1,
        finding.criterion or "",
        finding.code,
        finding.message,
    )


def validate(doc: AuditDocument, benchmark: Benchmark, strict: bool = False) -> ValidationReport:
    """Check ``doc`` against ``benchmark`` and report typed findings.

    Errors: entry code not in the benchmark, duplicate entry codes,
    benchmark id/version mismatch, malformed or out-of-scale outcome values.
    Warnings (errors when ``strict``): benchmark criterion without an entry,
    not-evaluated entries, not-applicable entries without a justification
    note. Findings are sorted by (severity, criterion code); the function is
    pure.
    """
    findings: list[Finding] = []
    incomplete = Severity.ERROR if strict else Severity.WARNING

    ref = doc.benchmark_ref
    if (ref.id, ref.version) != (benchmark.id, benchmark.version):
        findings.append(
            Finding(
                Severity.ERROR,
                "benchmark-mismatch",
                f"audit references benchmark {ref.id}@{ref.version}, "
                f"validating against {benchmark.id}@{benchmark.version}",
            )
        )

    seen: set[str] = set()
    for entry in doc.entries:
        code = entry.code
        if code in seen:
            findings.append(
                Finding(Severity.ERROR, "duplicate-entry", f"duplicate entry code {code}", code)
            )
            continue
        seen.add(code)
        if code not in benchmark.codes:
            findings.append(
                Finding(Severity.ERROR, "unknown-criterion", f"unknown criterion {code}", code)
            )
            continue
        if not entry.outcome.in_scale(doc.scale):
            findings.append(
                Finding(
                    Severity.ERROR,
                    "out-of-scale",
                    f"criterion {code}: outcome value {entry.outcome.value!r} is outside "
                    f"the {doc.scale.value} scale",
                    code,
                )
            )
            continue
        if entry.outcome.state is OutcomeState.NOT_EVALUATED:
            findings.append(
                Finding(incomplete, "not-evaluated", f"criterion {code} is not evaluated", code)
            )
        elif entry.outcome.state is OutcomeState.NOT_APPLICABLE and not (entry.notes or "").strip():
            findings.append(
                Finding(
                    incomplete,
                    "na-unjustified",
                    f"criterion {code} is marked not applicable without a justifying note",
                    code,
                )
            )

    for criterion in benchmark.criteria:
        if criterion.code not in seen:
            findings.append(
                Finding(
                    incomplete,
                    "missing-entry",
                    f"criterion {criterion.code} ({criterion.name}) has no entry",
                    criterion.code,
                )
            )

    return ValidationReport(findings=tuple(sorted(findings, key=_sort_key)))
