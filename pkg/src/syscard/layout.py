"""Card geometry: place one colored arc per criterion on concentric rings.

Rings follow the category order (innermost first); each aspect owns an equal
sector of the circle, clockwise from 12 o'clock. Within one cell the arcs
share the sector evenly with a fixed angular gap between and around them:
for n criteria in a sector of S degrees, each arc is (S - (n+1)*gap) / n
degrees wide. Everything here is pure geometry; rendering lives in svg.py.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .audit import (
    LIKERT_LABELS,
    NOT_EVALUATED,
    AuditDocument,
    Outcome,
    OutcomeScale,
    OutcomeState,
)
from .benchmark import Benchmark
from .errors import InvalidDocumentError
from .validation import validate

# Normative layout constants, sized for 56 legible arcs.
HUB_RADIUS = 40.0
RING_THICKNESS = 30.0
RING_GAP = 6.0
ARC_GAP_DEG = 2.0
CANVAS_MARGIN = 40.0

_HEX_PATTERN = re.compile(r"#[0-9a-f]{6}")


@dataclass(frozen=True)
class Color:
    """A lowercase #rrggbb color."""

    hex: str

    def __post_init__(self):
        if not _HEX_PATTERN.fullmatch(self.hex):
            raise ValueError(f"not a lowercase #rrggbb color: {self.hex!r}")


# Divergent red-to-green ramp: worst outcome at the red endpoint, best at the
# green endpoint, perceptually ordered midpoints in between.
LIKERT_COLORS = (
    Color("#d7191c"),
    Color("#fdae61"),
    Color("#ffffbf"),
    Color("#a6d96a"),
    Color("#1a9641"),
)
BINARY_COLORS = {"fail": LIKERT_COLORS[0], "pass": LIKERT_COLORS[-1]}
NOT_APPLICABLE_COLOR = Color("#bdbdbd")
NOT_EVALUATED_COLOR = Color("#f5f5f5")


def color_for(outcome: Outcome, scale: OutcomeScale) -> Color:
    """Fill color for an outcome under the given scale."""
    if outcome.state is OutcomeState.NOT_EVALUATED:
        return NOT_EVALUATED_COLOR
    if outcome.state is OutcomeState.NOT_APPLICABLE:
        return NOT_APPLICABLE_COLOR
    if scale is OutcomeScale.BINARY:
        if outcome.value in BINARY_COLORS:
            return BINARY_COLORS[outcome.value]
    elif type(outcome.value) is int and 1 <= outcome.value <= 5:
        return LIKERT_COLORS[outcome.value - 1]
    raise ValueError(f"outcome value {outcome.value!r} is invalid under scale {scale.value}")


@dataclass(frozen=True)
class Arc:
    """One criterion's annular arc. Angles are degrees clockwise from
    12 o'clock; ring 1 is innermost, quarter 1 starts at the top."""

    criterion_code: str
    ring_index: int
    quarter_index: int
    start_angle: float
    end_angle: float
    inner_radius: float
    outer_radius: float
    fill: Color


@dataclass(frozen=True)
class CardLayout:
    """Render-ready card: arcs in drawing order plus captions and legend."""

    arcs: tuple[Arc, ...]
    canvas_size: float
    legend: tuple[tuple[str, Color], ...]
    ring_labels: tuple[str, ...]  # category names, innermost ring first
    quarter_labels: tuple[str, ...]  # aspect names, clockwise from 12 o'clock
    title: str = ""


def ring_radii(ring_index: int) -> tuple[float, float]:
    """(inner, outer) radius of a ring, innermost ring being index 1."""
    inner = HUB_RADIUS + (ring_index - 1) * (RING_THICKNESS + RING_GAP)
    return inner, inner + RING_THICKNESS


def canvas_size(n_categories: int) -> float:
    return 2 * (HUB_RADIUS + n_categories * (RING_THICKNESS + RING_GAP)) + CANVAS_MARGIN


def scale_legend(scale: OutcomeScale) -> tuple[tuple[str, Color], ...]:
    if scale is OutcomeScale.BINARY:
        items = [(value, BINARY_COLORS[value]) for value in ("pass", "fail")]
    else:
        items = [
            (f"{value} ({LIKERT_LABELS[value]})", LIKERT_COLORS[value - 1])
            for value in (5, 4, 3, 2, 1)
        ]
    items.append(("not applicable", NOT_APPLICABLE_COLOR))
    items.append(("not evaluated", NOT_EVALUATED_COLOR))
    return tuple(items)


def layout(benchmark: Benchmark, doc: AuditDocument) -> CardLayout:
    """Compute the card layout for one audit.

    Refuses documents whose validation against ``benchmark`` has errors.
    Criteria with no entry are drawn as not evaluated. Works for any grid
    shape: aspects divide the circle into equal sectors of 360/n degrees.
    """
    report = validate(doc, benchmark, strict=False)
    if not report.is_valid:
        raise InvalidDocumentError(
            f"cannot lay out an invalid audit ({len(report.errors)} validation errors)",
            report,
        )

    sector = 360.0 / len(benchmark.aspects)
    cell_sizes: dict[tuple[int, int], int] = {}
    for criterion in benchmark.criteria:
        key = (criterion.category.index, criterion.aspect.index)
        cell_sizes[key] = cell_sizes.get(key, 0) + 1

    arcs: list[Arc] = []
    for criterion in benchmark.criteria:
        ring = criterion.category.index
        quarter = criterion.aspect.index
        n = cell_sizes[ring, quarter]
        width = (sector - (n + 1) * ARC_GAP_DEG) / n
        start = (quarter - 1) * sector + criterion.ordinal * ARC_GAP_DEG + (criterion.ordinal - 1) * width
        inner, outer = ring_radii(ring)
        entry = doc.entry_for(criterion.code)
        outcome = entry.outcome if entry is not None else NOT_EVALUATED
        arcs.append(
            Arc(
                criterion_code=criterion.code,
                ring_index=ring,
                quarter_index=quarter,
                start_angle=start,
                end_angle=start + width,
                inner_radius=inner,
                outer_radius=outer,
                fill=color_for(outcome, doc.scale),
            )
        )

    return CardLayout(
        arcs=tuple(arcs),
        canvas_size=canvas_size(len(benchmark.categories)),
        legend=scale_legend(doc.scale),
        ring_labels=tuple(c.name for c in benchmark.categories),
        quarter_labels=tuple(a.name for a in benchmark.aspects),
        title=doc.system.name,
    )
