"""Rebuild the committed fixtures. Run from the repo root:

    python tests/fixtures/regenerate.py

Deterministic by construction; re-running must not change any file.
"""
from __future__ import annotations

import datetime
import random
from pathlib import Path

from syscard import (
    AuditDocument,
    AuditInfo,
    BenchmarkRef,
    Entry,
    NOT_APPLICABLE,
    Outcome,
    OutcomeScale,
    SystemInfo,
    canonical_benchmark,
    layout,
    load_benchmark,
    render_svg,
    serialize_audit,
    serialize_benchmark,
)

FIXTURES = Path(__file__).parent

MINI_BENCHMARK = {
    "id": "mini-bench",
    "version": "0.2",
    "aspects": ["Data", "Pipeline"],
    "categories": ["Build", "Check", "Operate"],
    "criteria": [
        {"name": "Schema Documented", "aspect": "Data", "category": "Build", "ordinal": 1,
         "description": "Input and output schemas are written down."},
        {"name": "Sources Listed", "aspect": "Data", "category": "Build", "ordinal": 2,
         "description": "Every upstream data source is inventoried."},
        {"name": "Config Versioned", "aspect": "Pipeline", "category": "Build", "ordinal": 1,
         "description": "Pipeline configuration lives in version control."},
        {"name": "Nulls Audited", "aspect": "Data", "category": "Check", "ordinal": 1,
         "description": "Missing-value rates are measured per field."},
        {"name": "Drift Measured", "aspect": "Data", "category": "Check", "ordinal": 2,
         "description": "Input distributions are compared against training data."},
        {"name": "Labels Sampled", "aspect": "Data", "category": "Check", "ordinal": 3,
         "description": "A label sample is re-checked by hand each release."},
        {"name": "Dry Run Passes", "aspect": "Pipeline", "category": "Check", "ordinal": 1,
         "description": "A full pipeline dry run succeeds on fixture data."},
        {"name": "Retention Enforced", "aspect": "Data", "category": "Operate", "ordinal": 1,
         "description": "Stored data is deleted on the documented schedule."},
        {"name": "Alerts Wired", "aspect": "Pipeline", "category": "Operate", "ordinal": 1,
         "description": "Failures page an on-call operator."},
        {"name": "Rollback Tested", "aspect": "Pipeline", "category": "Operate", "ordinal": 2,
         "description": "The previous release can be restored and has been exercised."},
    ],
}

SYSTEM = SystemInfo(
    name="loan-triage",
    version="2.3.1",
    owner="Acme Lending Co",
    description="Scores consumer loan applications for manual review triage.",
)


def likert_audit() -> AuditDocument:
    benchmark = canonical_benchmark()
    rng = random.Random(20250601)
    pinned = {"C111": 5, "C343": 1, "C222": 2, "C445": 5}
    entries = []
    for criterion in benchmark.criteria:
        value = pinned.get(criterion.code, rng.randint(2, 5))
        extras = {}
        if criterion.code == "C111":
            extras["evidence"] = "Data dictionary v4 covers all six tables."
        if criterion.code == "C343":
            extras["evidence"] = "No override path for case workers in release 2.3."
            extras["notes"] = "Remediation ticket LT-812 opened."
        entries.append(Entry(code=criterion.code, outcome=Outcome.evaluated(value), **extras))
    return AuditDocument(
        system=SYSTEM,
        audit=AuditInfo(auditor="J. Rivera", date=datetime.date(2025, 6, 1), type="external"),
        benchmark_ref=BenchmarkRef(id=benchmark.id, version=benchmark.version),
        scale=OutcomeScale.LIKERT5,
        entries=tuple(entries),
    )


def reaudit() -> AuditDocument:
    # Re-audit six weeks later: exactly three outcomes moved (C222, C343, C445).
    base = likert_audit()
    moved = {"C222": 4, "C343": 3, "C445": 2}
    entries = tuple(
        Entry(
            code=e.code,
            outcome=Outcome.evaluated(moved[e.code]) if e.code in moved else e.outcome,
            evidence=e.evidence,
            notes="Override path shipped in 2.4; LT-812 closed." if e.code == "C343" else e.notes,
        )
        for e in base.entries
    )
    return AuditDocument(
        system=SystemInfo(name=SYSTEM.name, version="2.4.0", owner=SYSTEM.owner,
                          description=SYSTEM.description),
        audit=AuditInfo(auditor="J. Rivera", date=datetime.date(2025, 7, 14), type="external"),
        benchmark_ref=base.benchmark_ref,
        scale=base.scale,
        entries=entries,
    )


def binary_audit() -> AuditDocument:
    benchmark = canonical_benchmark()
    rng = random.Random(77)
    na_notes = {
        "C332": "Single-maintainer research prototype; no team to assess.",
        "C444": "No insurer currently offers coverage for this system class.",
    }
    entries = []
    for criterion in benchmark.criteria:
        if criterion.code in na_notes:
            entries.append(Entry(code=criterion.code, outcome=NOT_APPLICABLE,
                                 notes=na_notes[criterion.code]))
            continue
        value = "pass" if rng.random() < 0.8 else "fail"
        if criterion.code == "C211":
            value = "fail"
        if criterion.code == "C121":
            value = "pass"
        entries.append(Entry(code=criterion.code, outcome=Outcome.evaluated(value)))
    return AuditDocument(
        system=SYSTEM,
        audit=AuditInfo(auditor="internal QA", date=datetime.date(2025, 5, 20), type="internal"),
        benchmark_ref=BenchmarkRef(id=benchmark.id, version=benchmark.version),
        scale=OutcomeScale.BINARY,
        entries=tuple(entries),
    )


def mini_audit(benchmark) -> AuditDocument:
    outcomes = {
        "C111": Outcome.evaluated("pass"),
        "C112": Outcome.evaluated("pass"),
        "C121": Outcome.evaluated("pass"),
        "C211": Outcome.evaluated("fail"),
        "C212": Outcome.evaluated("pass"),
        "C213": Outcome.evaluated("fail"),
        "C221": Outcome.evaluated("pass"),
        "C311": NOT_APPLICABLE,
        "C321": Outcome.evaluated("pass"),
        "C322": Outcome.evaluated("fail"),
    }
    entries = tuple(
        Entry(code=code, outcome=outcome,
              notes="No stored data; the pipeline is stateless." if code == "C311" else None)
        for code, outcome in outcomes.items()
    )
    return AuditDocument(
        system=SystemInfo(name="mini & demo", version="0.1", owner="tests",
                          description="Tiny pipeline audited against mini-bench."),
        audit=AuditInfo(auditor="Á. Herrera", date=datetime.date(2025, 7, 15), type="internal"),
        benchmark_ref=BenchmarkRef(id=benchmark.id, version=benchmark.version),
        scale=OutcomeScale.BINARY,
        entries=entries,
    )


def main() -> None:
    import json

    mini_text = json.dumps(MINI_BENCHMARK, indent=2, ensure_ascii=False) + "\n"
    (FIXTURES / "mini_benchmark.json").write_text(mini_text, encoding="utf-8", newline="")
    mini = load_benchmark(mini_text)

    benchmark = canonical_benchmark()
    (FIXTURES / "canonical_benchmark.json").write_text(
        serialize_benchmark(benchmark), encoding="utf-8", newline=""
    )

    docs = {
        "complete_likert.json": likert_audit(),
        "reaudit_likert.json": reaudit(),
        "complete_binary.json": binary_audit(),
        "mini_audit.json": mini_audit(mini),
    }
    for name, doc in docs.items():
        (FIXTURES / name).write_text(serialize_audit(doc), encoding="utf-8", newline="")

    (FIXTURES / "golden_card_likert.svg").write_text(
        render_svg(layout(benchmark, likert_audit())), encoding="utf-8", newline=""
    )
    (FIXTURES / "golden_card_mini.svg").write_text(
        render_svg(layout(mini, mini_audit(mini))), encoding="utf-8", newline=""
    )
    print("fixtures regenerated")


if __name__ == "__main__":
    main()
