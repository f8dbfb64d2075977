"""Audit summaries and re-audit diffs.

Summaries tally outcomes per category, aspect, and cell and report coverage
and the lowest evaluated outcomes. Outcomes for distinct criteria measure
different things, so nothing here ever folds them into a composite score or
a whole-system verdict. Diffs compare two audits of the same benchmark
entry by entry.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .audit import (
    AuditDocument,
    Outcome,
    OutcomeScale,
    OutcomeState,
    outcome_label,
    outcome_to_wire,
)
from .benchmark import Benchmark
from .errors import BenchmarkMismatchError, InvalidDocumentError
from .validation import validate

REPORT_FORMATS = ("text", "md", "json")

_NA_KEY = "na"
_NOT_EVALUATED_KEY = "not_evaluated"


def tally_keys(scale: OutcomeScale) -> tuple[str, ...]:
    """Tally columns for a scale, worst outcome first."""
    if scale is OutcomeScale.BINARY:
        value_keys: tuple[str, ...] = ("fail", "pass")
    else:
        value_keys = tuple(str(v) for v in (1, 2, 3, 4, 5))
    return value_keys + (_NA_KEY, _NOT_EVALUATED_KEY)


def _tally_key(outcome: Outcome) -> str:
    if outcome.state is OutcomeState.NOT_EVALUATED:
        return _NOT_EVALUATED_KEY
    if outcome.state is OutcomeState.NOT_APPLICABLE:
        return _NA_KEY
    return str(outcome.value)


@dataclass(frozen=True)
class SummaryReport:
    """Tallies and coverage for one audit. Deliberately has no aggregate
    score: per-criterion outcomes are not reducible to one number."""

    system_name: str
    benchmark_id: str
    benchmark_version: str
    scale: OutcomeScale
    total: int
    evaluated: int
    coverage: float
    keys: tuple[str, ...]
    by_category: dict[str, dict[str, int]]
    by_aspect: dict[str, dict[str, int]]
    by_cell: tuple[tuple[str, str, dict[str, int]], ...]
    worst_value: int | str | None
    worst: tuple[tuple[str, str], ...]  # (code, name) at the lowest evaluated value

    def to_mapping(self) -> dict:
        """The structured machine-readable form of the report."""
        return {
            "system": self.system_name,
            "benchmark": {"id": self.benchmark_id, "version": self.benchmark_version},
            "scale": self.scale.value,
            "total": self.total,
            "evaluated": self.evaluated,
            "coverage": self.coverage,
            "tallies": {
                "by_category": self.by_category,
                "by_aspect": self.by_aspect,
                "by_cell": [
                    {"category": category, "aspect": aspect, "counts": counts}
                    for category, aspect, counts in self.by_cell
                ],
            },
            "worst": {
                "value": self.worst_value,
                "criteria": [{"code": code, "name": name} for code, name in self.worst],
            },
        }


def summarize(doc: AuditDocument, benchmark: Benchmark) -> SummaryReport:
    """Tally one audit against its benchmark.

    Criteria without an entry count as not evaluated. Refuses documents
    whose validation has errors. "Worst" means failed criteria on the
    binary scale and the minimum evaluated value on likert5; not-applicable
    and not-evaluated entries never appear in the worst list.
    """
    report = validate(doc, benchmark, strict=False)
    if not report.is_valid:
        raise InvalidDocumentError(
            f"cannot summarize an invalid audit ({len(report.errors)} validation errors)",
            report,
        )

    keys = tally_keys(doc.scale)
    by_category = {c.name: {k: 0 for k in keys} for c in benchmark.categories}
    by_aspect = {a.name: {k: 0 for k in keys} for a in benchmark.aspects}
    cells = {
        (c.name, a.name): {k: 0 for k in keys}
        for c in benchmark.categories
        for a in benchmark.aspects
    }

    evaluated: list[tuple[int | str, str, str]] = []
    for criterion in benchmark.criteria:
        entry = doc.entry_for(criterion.code)
        outcome = entry.outcome if entry is not None else Outcome(OutcomeState.NOT_EVALUATED)
        key = _tally_key(outcome)
        by_category[criterion.category.name][key] += 1
        by_aspect[criterion.aspect.name][key] += 1
        cells[criterion.category.name, criterion.aspect.name][key] += 1
        if outcome.is_evaluated:
            evaluated.append((outcome.value, criterion.code, criterion.name))

    worst_value: int | str | None = None
    worst: tuple[tuple[str, str], ...] = ()
    if doc.scale is OutcomeScale.BINARY:
        fails = sorted((code, name) for value, code, name in evaluated if value == "fail")
        if fails:
            worst_value = "fail"
            worst = tuple(fails)
    elif evaluated:
        worst_value = min(value for value, _, _ in evaluated)
        worst = tuple(sorted((code, name) for value, code, name in evaluated if value == worst_value))

    total = len(benchmark.criteria)
    return SummaryReport(
        system_name=doc.system.name,
        benchmark_id=benchmark.id,
        benchmark_version=benchmark.version,
        scale=doc.scale,
        total=total,
        evaluated=len(evaluated),
        coverage=len(evaluated) / total if total else 0.0,
        keys=keys,
        by_category=by_category,
        by_aspect=by_aspect,
        by_cell=tuple(
            (category, aspect, counts) for (category, aspect), counts in cells.items()
        ),
        worst_value=worst_value,
        worst=worst,
    )


def _key_label(key: str) -> str:
    return "not evaluated" if key == _NOT_EVALUATED_KEY else key


def _worst_heading(report: SummaryReport) -> str:
    if report.worst_value is None:
        return "no evaluated outcomes" if not report.evaluated else "no failed criteria"
    if report.scale is OutcomeScale.BINARY:
        return f"failed criteria ({len(report.worst)})"
    label = outcome_label(Outcome.evaluated(report.worst_value), report.scale)
    return f"lowest evaluated outcome: {label} ({len(report.worst)} criteria)"


def summary_text(report: SummaryReport) -> str:
    lines = [
        f"system: {report.system_name}",
        f"benchmark: {report.benchmark_id}@{report.benchmark_version}",
        f"scale: {report.scale.value}",
        f"coverage: {report.evaluated}/{report.total} evaluated ({report.coverage:.1%})",
        "",
        "by category:",
    ]
    label_width = max(len(name) for name in list(report.by_category) + list(report.by_aspect))
    for name, counts in report.by_category.items():
        row = "  ".join(f"{_key_label(k)}: {counts[k]}" for k in report.keys)
        lines.append(f"  {name:<{label_width}}  {row}")
    lines.append("by aspect:")
    for name, counts in report.by_aspect.items():
        row = "  ".join(f"{_key_label(k)}: {counts[k]}" for k in report.keys)
        lines.append(f"  {name:<{label_width}}  {row}")
    lines.append("")
    lines.append(_worst_heading(report))
    for code, name in report.worst:
        lines.append(f"  {code} {name}")
    return "\n".join(lines) + "\n"


def summary_markdown(report: SummaryReport) -> str:
    lines = [
        f"# Audit summary: {report.system_name}",
        "",
        f"- benchmark: `{report.benchmark_id}@{report.benchmark_version}`",
        f"- scale: {report.scale.value}",
        f"- coverage: {report.evaluated}/{report.total} evaluated ({report.coverage:.1%})",
    ]
    header = "| Aspect | " + " | ".join(_key_label(k) for k in report.keys) + " |"
    rule = "|---" * (len(report.keys) + 1) + "|"
    cells = {(category, aspect): counts for category, aspect, counts in report.by_cell}
    for category in report.by_category:
        lines += ["", f"## {category}", "", header, rule]
        for aspect in report.by_aspect:
            counts = cells[category, aspect]
            row = " | ".join(str(counts[k]) for k in report.keys)
            lines.append(f"| {aspect} | {row} |")
    lines += ["", f"## {_worst_heading(report)}", ""]
    for code, name in report.worst:
        lines.append(f"- {code} {name}")
    return "\n".join(lines) + "\n"


def summary_json(report: SummaryReport) -> str:
    return json.dumps(report.to_mapping(), indent=2, ensure_ascii=False) + "\n"


def render_summary(report: SummaryReport, fmt: str = "text") -> str:
    if fmt == "text":
        return summary_text(report)
    if fmt == "md":
        return summary_markdown(report)
    if fmt == "json":
        return summary_json(report)
    raise ValueError(f"unknown report format {fmt!r}; expected one of {', '.join(REPORT_FORMATS)}")


@dataclass(frozen=True)
class AuditDiff:
    """Entry-level differences between two audits of the same benchmark."""

    changed: tuple[tuple[str, Outcome, Outcome], ...]  # (code, old, new)
    added: tuple[str, ...]  # codes present only in the new audit
    removed: tuple[str, ...]  # codes present only in the old audit
    metadata_changes: tuple[tuple[str, str, str], ...]  # (field, old, new)
    old_scale: OutcomeScale
    new_scale: OutcomeScale

    @property
    def is_empty(self) -> bool:
        return not (self.changed or self.added or self.removed or self.metadata_changes)


def diff(old: AuditDocument, new: AuditDocument) -> AuditDiff:
    """Compare two audits entry by entry, keyed by criterion code.

    Outcome equality is exact (state and value). Both documents must
    reference the same benchmark id; version changes show up as metadata.
    """
    if old.benchmark_ref.id != new.benchmark_ref.id:
        raise BenchmarkMismatchError(
            f"cannot diff audits of different benchmarks: "
            f"{old.benchmark_ref.id} vs {new.benchmark_ref.id}"
        )

    metadata_fields = (
        ("schema_version", old.schema_version, new.schema_version),
        ("system.name", old.system.name, new.system.name),
        ("system.version", old.system.version, new.system.version),
        ("system.owner", old.system.owner, new.system.owner),
        ("system.description", old.system.description, new.system.description),
        ("audit.auditor", old.audit.auditor, new.audit.auditor),
        ("audit.date", old.audit.date.isoformat(), new.audit.date.isoformat()),
        ("audit.type", old.audit.type, new.audit.type),
        ("benchmark.version", old.benchmark_ref.version, new.benchmark_ref.version),
        ("scale", old.scale.value, new.scale.value),
    )
    metadata_changes = tuple(
        (field, before, after) for field, before, after in metadata_fields if before != after
    )

    old_codes = {e.code for e in old.entries}
    new_codes = {e.code for e in new.entries}
    changed = tuple(
        (code, old.entry_for(code).outcome, new.entry_for(code).outcome)
        for code in sorted(old_codes & new_codes)
        if old.entry_for(code).outcome != new.entry_for(code).outcome
    )
    return AuditDiff(
        changed=changed,
        added=tuple(sorted(new_codes - old_codes)),
        removed=tuple(sorted(old_codes - new_codes)),
        metadata_changes=metadata_changes,
        old_scale=old.scale,
        new_scale=new.scale,
    )


def diff_text(d: AuditDiff) -> str:
    if d.is_empty:
        return "no differences\n"
    lines: list[str] = []
    if d.changed:
        lines.append(f"changed ({len(d.changed)}):")
        for code, before, after in d.changed:
            lines.append(
                f"  {code}: {outcome_label(before, d.old_scale)}"
                f" -> {outcome_label(after, d.new_scale)}"
            )
    if d.added:
        lines.append(f"added ({len(d.added)}): {', '.join(d.added)}")
    if d.removed:
        lines.append(f"removed ({len(d.removed)}): {', '.join(d.removed)}")
    if d.metadata_changes:
        lines.append(f"metadata ({len(d.metadata_changes)}):")
        for field, before, after in d.metadata_changes:
            lines.append(f"  {field}: {before!r} -> {after!r}")
    return "\n".join(lines) + "\n"


def diff_markdown(d: AuditDiff) -> str:
    if d.is_empty:
        return "No differences.\n"
    lines: list[str] = ["# Audit diff"]
    if d.changed:
        lines += ["", "## Changed", "", "| Criterion | Old | New |", "|---|---|---|"]
        for code, before, after in d.changed:
            lines.append(
                f"| {code} | {outcome_label(before, d.old_scale)}"
                f" | {outcome_label(after, d.new_scale)} |"
            )
    if d.added:
        lines += ["", "## Added", ""] + [f"- {code}" for code in d.added]
    if d.removed:
        lines += ["", "## Removed", ""] + [f"- {code}" for code in d.removed]
    if d.metadata_changes:
        lines += ["", "## Metadata", "", "| Field | Old | New |", "|---|---|---|"]
        for field, before, after in d.metadata_changes:
            lines.append(f"| {field} | {before} | {after} |")
    return "\n".join(lines) + "\n"


def diff_json(d: AuditDiff) -> str:
    payload = {
        "changed": [
            {"code": code, "old": outcome_to_wire(before), "new": outcome_to_wire(after)}
            for code, before, after in d.changed
        ],
        "added": list(d.added),
        "removed": list(d.removed),
        "metadata": [
            {"field": field, "old": before, "new": after}
            for field, before, after in d.metadata_changes
        ],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def render_diff(d: AuditDiff, fmt: str = "text") -> str:
    if fmt == "text":
        return diff_text(d)
    if fmt == "md":
        return diff_markdown(d)
    if fmt == "json":
        return diff_json(d)
    raise ValueError(f"unknown report format {fmt!r}; expected one of {', '.join(REPORT_FORMATS)}")
