"""Deterministic SVG 1.1 rendering of a card layout.

Every numeral is emitted with exactly three decimals (round-half-to-even),
no timestamps and no randomness, so equal layouts produce byte-identical
documents on any platform. Each criterion arc is a ``<path>`` carrying a
``data-code`` attribute for downstream tooling.
"""
from __future__ import annotations

import math

from .layout import Arc, CardLayout

LEGEND_WIDTH = 150.0
ARC_STROKE = "#cccccc"  # keeps near-white arcs visible on the white canvas
TEXT_COLOR = "#333333"


def _fmt(value: float) -> str:
    text = f"{value:.3f}"
    return "0.000" if text == "-0.000" else text


def _point(cx: float, cy: float, radius: float, angle_deg: float) -> tuple[float, float]:
    # Degrees clockwise from 12 o'clock, in SVG screen coordinates (y down).
    rad = math.radians(angle_deg)
    return cx + radius * math.sin(rad), cy - radius * math.cos(rad)


def _arc_path(arc: Arc, cx: float, cy: float) -> str:
    x1, y1 = _point(cx, cy, arc.outer_radius, arc.start_angle)
    x2, y2 = _point(cx, cy, arc.outer_radius, arc.end_angle)
    x3, y3 = _point(cx, cy, arc.inner_radius, arc.end_angle)
    x4, y4 = _point(cx, cy, arc.inner_radius, arc.start_angle)
    large = 1 if arc.end_angle - arc.start_angle > 180 else 0
    r_out, r_in = _fmt(arc.outer_radius), _fmt(arc.inner_radius)
    return (
        f"M {_fmt(x1)} {_fmt(y1)} "
        f"A {r_out} {r_out} 0 {large} 1 {_fmt(x2)} {_fmt(y2)} "
        f"L {_fmt(x3)} {_fmt(y3)} "
        f"A {r_in} {r_in} 0 {large} 0 {_fmt(x4)} {_fmt(y4)} Z"
    )


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def _text(x: float, y: float, content: str, size: float, **extra: str) -> str:
    attrs = "".join(f' {k.replace("_", "-")}="{v}"' for k, v in extra.items())
    return (
        f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="{_fmt(size)}"'
        f"{attrs}>{_escape(content)}</text>"
    )


def _haloed_text(x: float, y: float, content: str, size: float, **extra: str) -> list[str]:
    # SVG 1.1 has no paint-order, so the halo is a stroked copy underneath.
    halo = dict(extra, stroke="#ffffff", stroke_width=_fmt(2.5), fill="#ffffff")
    return [
        _text(x, y, content, size, **halo),
        _text(x, y, content, size, **dict(extra, fill=TEXT_COLOR)),
    ]


def render_svg(card: CardLayout) -> str:
    """Standalone SVG for a card layout; elements follow the layout order."""
    size = card.canvas_size
    width = size + LEGEND_WIDTH
    cx = cy = size / 2
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(size)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(size)}" font-family="sans-serif">',
        f'<rect x="0.000" y="0.000" width="{_fmt(width)}" height="{_fmt(size)}" fill="#ffffff"/>',
    ]

    lines.append('<g stroke-width="0.500">')
    for arc in card.arcs:
        lines.append(
            f'<path d="{_arc_path(arc, cx, cy)}" fill="{arc.fill.hex}" '
            f'stroke="{ARC_STROKE}" data-code="{_escape(arc.criterion_code)}"/>'
        )
    lines.append("</g>")

    if card.title:
        lines.append(
            _text(cx, cy + 3.0, card.title, 10.0, text_anchor="middle",
                  font_weight="bold", fill=TEXT_COLOR)
        )

    # Ring captions sit on the 12 o'clock axis, one per ring.
    if card.arcs:
        by_ring: dict[int, Arc] = {}
        for arc in card.arcs:
            by_ring.setdefault(arc.ring_index, arc)
        outer_max = max(arc.outer_radius for arc in card.arcs)
        for ring_index, label in enumerate(card.ring_labels, start=1):
            arc = by_ring.get(ring_index)
            if arc is None:
                continue
            mid = (arc.inner_radius + arc.outer_radius) / 2
            lines.extend(
                _haloed_text(cx, cy - mid + 2.5, label, 7.0, text_anchor="middle")
            )
        # Quarter captions sit just outside the outermost ring, at the middle
        # of each sector.
        sector = 360.0 / len(card.quarter_labels)
        for quarter_index, label in enumerate(card.quarter_labels, start=1):
            angle = (quarter_index - 0.5) * sector
            x, y = _point(cx, cy, outer_max + 14.0, angle)
            lines.append(
                _text(x, y + 4.0, label, 11.0, text_anchor="middle", fill="#111111")
            )

    x0 = size + 12.0
    y0 = 28.0
    for position, (label, color) in enumerate(card.legend):
        y = y0 + position * 20.0
        lines.append(
            f'<rect x="{_fmt(x0)}" y="{_fmt(y)}" width="12.000" height="12.000" '
            f'fill="{color.hex}" stroke="#999999" stroke-width="0.500"/>'
        )
        lines.append(_text(x0 + 18.0, y + 10.0, label, 10.0, fill=TEXT_COLOR))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
