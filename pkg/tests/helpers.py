"""Seeded generators shared by the unit and acceptance tests."""
from __future__ import annotations

import dataclasses
import datetime
import json
import random

from syscard import (
    NOT_APPLICABLE,
    NOT_EVALUATED,
    AuditDocument,
    AuditInfo,
    Benchmark,
    BenchmarkRef,
    Entry,
    Outcome,
    OutcomeScale,
    SystemInfo,
    load_benchmark,
)

TEXT_POOL = (
    "",
    "ok",
    "reviewed against release 2.3",
    "see ticket LT-812",
    "café ☕ non-ascii",
    'quote " backslash \\ and\nnewline',
    "  leading and trailing  ",
)


def random_text(rng: random.Random) -> str:
    return rng.choice(TEXT_POOL)


def random_outcome(rng: random.Random, scale: OutcomeScale) -> Outcome:
    roll = rng.random()
    if roll < 0.15:
        return NOT_EVALUATED
    if roll < 0.3:
        return NOT_APPLICABLE
    if scale is OutcomeScale.BINARY:
        return Outcome.evaluated(rng.choice(("pass", "fail")))
    return Outcome.evaluated(rng.randint(1, 5))


def random_audit(rng: random.Random, benchmark: Benchmark) -> AuditDocument:
    """A syntactically valid audit with random scale, outcomes, and coverage."""
    scale = rng.choice((OutcomeScale.BINARY, OutcomeScale.LIKERT5))
    entries = []
    for criterion in benchmark.criteria:
        if rng.random() < 0.1:  # partial coverage: some criteria get no entry
            continue
        extras = {}
        if rng.random() < 0.3:
            extras["evidence"] = random_text(rng)
        if rng.random() < 0.3:
            extras["notes"] = random_text(rng)
        entries.append(
            Entry(code=criterion.code, outcome=random_outcome(rng, scale), **extras)
        )
    return AuditDocument(
        system=SystemInfo(
            name=random_text(rng) or "system-under-test",
            version=f"{rng.randint(0, 9)}.{rng.randint(0, 20)}",
            owner=random_text(rng),
            description=random_text(rng),
        ),
        audit=AuditInfo(
            auditor=random_text(rng),
            date=datetime.date(2020, 1, 1) + datetime.timedelta(days=rng.randint(0, 2500)),
            type=rng.choice(("internal", "external")),
        ),
        benchmark_ref=BenchmarkRef(id=benchmark.id, version=benchmark.version),
        scale=scale,
        entries=tuple(entries),
    )


def random_benchmark(rng: random.Random) -> Benchmark:
    """A custom benchmark grid: 2-6 aspects, 2-5 categories, 1-9 criteria per cell."""
    n_aspects = rng.randint(2, 6)
    n_categories = rng.randint(2, 5)
    aspects = [f"aspect-{i}" for i in range(1, n_aspects + 1)]
    categories = [f"category-{j}" for j in range(1, n_categories + 1)]
    criteria = []
    for cat_idx, category in enumerate(categories, start=1):
        for asp_idx, aspect in enumerate(aspects, start=1):
            for ordinal in range(1, rng.randint(1, 9) + 1):
                criteria.append(
                    {
                        "name": f"check {cat_idx}.{asp_idx}.{ordinal}",
                        "aspect": aspect,
                        "category": category,
                        "ordinal": ordinal,
                    }
                )
    document = {
        "id": f"custom-{rng.randint(0, 10**6)}",
        "version": "1.0",
        "aspects": aspects,
        "categories": categories,
        "criteria": criteria,
    }
    return load_benchmark(json.dumps(document))


CORRUPTION_KINDS = ("unknown-code", "out-of-scale", "duplicate-code", "benchmark-mismatch")


def corrupt(doc: AuditDocument, benchmark: Benchmark, rng: random.Random, kind: str) -> AuditDocument:
    """One random corruption of ``kind``; every kind must trip the validator."""
    entries = list(doc.entries)
    position = rng.randrange(len(entries))
    victim = entries[position]
    if kind == "unknown-code":
        while True:
            code = f"C{rng.randint(1, 9)}{rng.randint(1, 9)}{rng.randint(1, 9)}"
            if code not in benchmark.codes and code != victim.code:
                break
        entries[position] = dataclasses.replace(victim, code=code)
    elif kind == "out-of-scale":
        if doc.scale is OutcomeScale.BINARY:
            bad = rng.choice(("maybe", 3, 1, "PASS"))
        else:
            bad = rng.choice((0, 6, 7, -1, "pass", "good"))
        entries[position] = dataclasses.replace(victim, outcome=Outcome.evaluated(bad))
    elif kind == "duplicate-code":
        other = entries[(position + 1 + rng.randrange(len(entries) - 1)) % len(entries)]
        entries[position] = dataclasses.replace(victim, code=other.code)
    elif kind == "benchmark-mismatch":
        ref = doc.benchmark_ref
        if rng.random() < 0.5:
            ref = dataclasses.replace(ref, id=ref.id + "-fork")
        else:
            ref = dataclasses.replace(ref, version=ref.version + ".99")
        return dataclasses.replace(doc, benchmark_ref=ref)
    else:
        raise ValueError(f"unknown corruption kind {kind!r}")
    return dataclasses.replace(doc, entries=tuple(entries))


SVG_NS = "{http://www.w3.org/2000/svg}"


def svg_arcs(svg_text: str) -> list[tuple[str, str, float, float]]:
    """(code, fill, outer_radius, start_angle) for each data-code path.

    Reconstructed purely from the emitted document: the first path point is
    the outer corner at the arc's start angle, measured clockwise from
    12 o'clock around the card center.
    """
    import math
    import re
    import xml.etree.ElementTree as ET

    root = ET.fromstring(svg_text)
    height = float(root.get("height"))
    cx = cy = height / 2  # the card is the square left part of the canvas
    arcs = []
    for path in root.iter(f"{SVG_NS}path"):
        code = path.get("data-code")
        if not code:
            continue
        numbers = re.findall(r"-?\d+\.\d+", path.get("d"))
        x, y = float(numbers[0]), float(numbers[1])
        outer_radius = float(numbers[2])
        angle = math.degrees(math.atan2(x - cx, cy - y)) % 360
        arcs.append((code, path.get("fill"), outer_radius, angle))
    return arcs
