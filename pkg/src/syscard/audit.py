"""Audit documents: one evaluation of one system against a benchmark.

The on-disk form is UTF-8 JSON with a fixed key order and entries sorted by
criterion code, so equal documents always serialize to identical bytes.
Outcome wire values: "pass"/"fail" (binary scale), integers 1..5 (likert5),
"na" (not applicable), null (not evaluated).
"""
from __future__ import annotations

import datetime
import json
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .benchmark import Benchmark
from .errors import ParseError, SchemaError

SCHEMA_VERSION = "1.0"

#: Criterion code grammar: C + category digit + aspect digit + ordinal digit.
CODE_PATTERN = re.compile(r"C[1-9][1-9][1-9]")

AUDIT_TYPES = ("internal", "external")

LIKERT_LABELS = {1: "poor", 2: "fair", 3: "good", 4: "very good", 5: "excellent"}
BINARY_VALUES = ("fail", "pass")
LIKERT_VALUES = (1, 2, 3, 4, 5)


class OutcomeScale(str, Enum):
    BINARY = "binary"
    LIKERT5 = "likert5"

    @property
    def values(self) -> tuple:
        """Admissible evaluated values, worst first."""
        return BINARY_VALUES if self is OutcomeScale.BINARY else LIKERT_VALUES


class OutcomeState(str, Enum):
    NOT_EVALUATED = "not_evaluated"
    NOT_APPLICABLE = "na"
    EVALUATED = "evaluated"


@dataclass(frozen=True)
class Outcome:
    """Evaluation outcome of one criterion. ``value`` is set iff evaluated."""

    state: OutcomeState
    value: int | str | None = None

    @classmethod
    def evaluated(cls, value: int | str) -> Outcome:
        return cls(OutcomeState.EVALUATED, value)

    @property
    def is_evaluated(self) -> bool:
        return self.state is OutcomeState.EVALUATED

    def in_scale(self, scale: OutcomeScale) -> bool:
        """Whether this outcome is well-formed under ``scale``."""
        if self.state is not OutcomeState.EVALUATED:
            return self.value is None
        if scale is OutcomeScale.BINARY:
            return self.value in BINARY_VALUES
        return type(self.value) is int and self.value in LIKERT_VALUES


NOT_EVALUATED = Outcome(OutcomeState.NOT_EVALUATED)
NOT_APPLICABLE = Outcome(OutcomeState.NOT_APPLICABLE)


def outcome_to_wire(outcome: Outcome) -> int | str | None:
    if outcome.state is OutcomeState.NOT_EVALUATED:
        return None
    if outcome.state is OutcomeState.NOT_APPLICABLE:
        return "na"
    return outcome.value


def outcome_label(outcome: Outcome, scale: OutcomeScale) -> str:
    """Human-readable outcome, e.g. "3 (good)" or "not evaluated"."""
    if outcome.state is OutcomeState.NOT_EVALUATED:
        return "not evaluated"
    if outcome.state is OutcomeState.NOT_APPLICABLE:
        return "not applicable"
    if scale is OutcomeScale.LIKERT5 and outcome.value in LIKERT_LABELS:
        return f"{outcome.value} ({LIKERT_LABELS[outcome.value]})"
    return str(outcome.value)


@dataclass(frozen=True)
class Entry:
    """One audited criterion: outcome plus free-text evidence and notes."""

    code: str
    outcome: Outcome
    evidence: str | None = None
    notes: str | None = None


@dataclass(frozen=True)
class SystemInfo:
    name: str = ""
    version: str = ""
    owner: str = ""
    description: str = ""


@dataclass(frozen=True)
class AuditInfo:
    auditor: str = ""
    date: datetime.date = datetime.date(1970, 1, 1)
    type: str = "internal"  # "internal" or "external"


@dataclass(frozen=True)
class BenchmarkRef:
    """Which benchmark (id and version) an audit was made against."""

    id: str
    version: str


@dataclass(frozen=True)
class AuditDocument:
    """A complete audit. Entries are normalized to code order on construction."""

    system: SystemInfo
    audit: AuditInfo
    benchmark_ref: BenchmarkRef
    scale: OutcomeScale
    entries: tuple[Entry, ...] = ()
    schema_version: str = SCHEMA_VERSION

    def __post_init__(self):
        ordered = tuple(sorted(self.entries, key=lambda e: e.code))
        object.__setattr__(self, "entries", ordered)

    @cached_property
    def _by_code(self) -> dict[str, Entry]:
        return {e.code: e for e in self.entries}

    def entry_for(self, code: str) -> Entry | None:
        return self._by_code.get(code)


def _expect_object(raw, label: str, keys: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict:
    if not isinstance(raw, dict):
        raise SchemaError(f"{label} must be a JSON object")
    unknown = set(raw) - set(keys) - set(optional)
    if unknown:
        raise SchemaError(f"{label}: unknown fields: {', '.join(sorted(unknown))}")
    missing = [k for k in keys if k not in raw]
    if missing:
        raise SchemaError(f"{label}: missing fields: {', '.join(missing)}")
    return raw


def _expect_str(raw: dict, label: str, key: str) -> str:
    value = raw[key]
    if not isinstance(value, str):
        raise SchemaError(f"{label}: {key!r} must be a string")
    return value


def _outcome_from_wire(value, scale: OutcomeScale, code: str) -> Outcome:
    if value is None:
        return NOT_EVALUATED
    if value == "na":
        return NOT_APPLICABLE
    outcome = Outcome.evaluated(value)
    if not outcome.in_scale(scale):
        raise SchemaError(
            f"entry {code}: outcome {value!r} is outside the {scale.value} scale"
        )
    return outcome


def parse_audit(document_text: str) -> AuditDocument:
    """Parse audit JSON, enforcing the schema and all document invariants."""
    try:
        raw = json.loads(document_text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    raw = _expect_object(
        raw, "audit document",
        ("schema_version", "system", "audit", "benchmark", "scale", "entries"),
    )
    if raw["schema_version"] != SCHEMA_VERSION:
        raise SchemaError(
            f"unsupported schema_version {raw['schema_version']!r}; expected {SCHEMA_VERSION!r}"
        )

    sys_raw = _expect_object(raw["system"], "'system'", ("name", "version", "owner", "description"))
    system = SystemInfo(*(_expect_str(sys_raw, "'system'", k) for k in ("name", "version", "owner", "description")))

    audit_raw = _expect_object(raw["audit"], "'audit'", ("auditor", "date", "type"))
    date_text = _expect_str(audit_raw, "'audit'", "date")
    try:
        date = datetime.date.fromisoformat(date_text)
    except ValueError:
        raise SchemaError(f"'audit': {date_text!r} is not a valid YYYY-MM-DD date") from None
    audit_type = _expect_str(audit_raw, "'audit'", "type")
    if audit_type not in AUDIT_TYPES:
        raise SchemaError(f"'audit': type must be one of {', '.join(AUDIT_TYPES)}; got {audit_type!r}")
    audit = AuditInfo(auditor=_expect_str(audit_raw, "'audit'", "auditor"), date=date, type=audit_type)

    ref_raw = _expect_object(raw["benchmark"], "'benchmark'", ("id", "version"))
    benchmark_ref = BenchmarkRef(
        id=_expect_str(ref_raw, "'benchmark'", "id"),
        version=_expect_str(ref_raw, "'benchmark'", "version"),
    )

    scale_text = raw["scale"]
    try:
        scale = OutcomeScale(scale_text)
    except ValueError:
        raise SchemaError(f"'scale' must be \"binary\" or \"likert5\"; got {scale_text!r}") from None

    if not isinstance(raw["entries"], list):
        raise SchemaError("'entries' must be an array")
    entries: list[Entry] = []
    seen: set[str] = set()
    for position, item in enumerate(raw["entries"]):
        item = _expect_object(
            item, f"entries[{position}]", ("code", "outcome"), optional=("evidence", "notes")
        )
        code = _expect_str(item, f"entries[{position}]", "code")
        if not CODE_PATTERN.fullmatch(code):
            raise SchemaError(f"entries[{position}]: malformed criterion code {code!r}")
        if code in seen:
            raise SchemaError(f"duplicate entry code {code}")
        seen.add(code)
        outcome = _outcome_from_wire(item["outcome"], scale, code)
        extras = {}
        for key in ("evidence", "notes"):
            if key in item:
                if not isinstance(item[key], str):
                    raise SchemaError(f"entry {code}: {key!r} must be a string")
                extras[key] = item[key]
        entries.append(Entry(code=code, outcome=outcome, **extras))

    return AuditDocument(
        system=system,
        audit=audit,
        benchmark_ref=benchmark_ref,
        scale=scale,
        entries=tuple(entries),
    )


def serialize_audit(doc: AuditDocument) -> str:
    """Canonical JSON text: fixed key order, entries sorted by code, 2-space
    indent, trailing newline. Equal documents yield identical bytes."""
    entries = []
    for entry in doc.entries:
        item: dict = {"code": entry.code, "outcome": outcome_to_wire(entry.outcome)}
        if entry.evidence is not None:
            item["evidence"] = entry.evidence
        if entry.notes is not None:
            item["notes"] = entry.notes
        entries.append(item)
    payload = {
        "schema_version": doc.schema_version,
        "system": {
            "name": doc.system.name,
            "version": doc.system.version,
            "owner": doc.system.owner,
            "description": doc.system.description,
        },
        "audit": {
            "auditor": doc.audit.auditor,
            "date": doc.audit.date.isoformat(),
            "type": doc.audit.type,
        },
        "benchmark": {"id": doc.benchmark_ref.id, "version": doc.benchmark_ref.version},
        "scale": doc.scale.value,
        "entries": entries,
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def scaffold_audit(
    benchmark: Benchmark,
    system_name: str,
    scale: OutcomeScale,
    date: datetime.date | None = None,
    auditor: str = "",
    audit_type: str = "internal",
) -> AuditDocument:
    """A blank audit: one not-evaluated entry per benchmark criterion."""
    if date is None:
        date = datetime.date.today()
    return AuditDocument(
        system=SystemInfo(name=system_name),
        audit=AuditInfo(auditor=auditor, date=date, type=audit_type),
        benchmark_ref=BenchmarkRef(id=benchmark.id, version=benchmark.version),
        scale=scale,
        entries=tuple(Entry(code=c.code, outcome=NOT_EVALUATED) for c in benchmark.criteria),
    )
