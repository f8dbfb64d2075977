from __future__ import annotations

import re
import xml.etree.ElementTree as ET

from syscard import OutcomeScale, color_for, layout, load_benchmark, render_svg, scaffold_audit
from conftest import fixture_text
from helpers import SVG_NS, svg_arcs


def test_rendering_is_deterministic(benchmark, complete_likert):
    first = render_svg(layout(benchmark, complete_likert))
    second = render_svg(layout(benchmark, complete_likert))
    assert first == second


def test_golden_likert_card(benchmark, complete_likert):
    assert render_svg(layout(benchmark, complete_likert)) == fixture_text("golden_card_likert.svg")


def test_golden_mini_card():
    mini = load_benchmark(fixture_text("mini_benchmark.json"))
    from syscard import parse_audit

    doc = parse_audit(fixture_text("mini_audit.json"))
    assert render_svg(layout(mini, doc)) == fixture_text("golden_card_mini.svg")


def test_one_data_code_path_per_criterion(benchmark, complete_likert):
    svg = render_svg(layout(benchmark, complete_likert))
    codes = [code for code, _, _, _ in svg_arcs(svg)]
    assert codes == [c.code for c in benchmark.criteria]


def test_fills_in_svg_match_palette(benchmark, complete_likert):
    svg = render_svg(layout(benchmark, complete_likert))
    fills = {code: fill for code, fill, _, _ in svg_arcs(svg)}
    for entry in complete_likert.entries:
        assert fills[entry.code] == color_for(entry.outcome, complete_likert.scale).hex


def test_all_decimal_numerals_have_three_places(benchmark, complete_likert):
    svg = render_svg(layout(benchmark, complete_likert))
    # The XML and SVG version identifiers are fixed strings, not measurements.
    body = svg.replace('version="1.0"', "").replace('version="1.1"', "")
    for token in re.findall(r"-?\d+\.\d+", body):
        assert re.fullmatch(r"-?\d+\.\d{3}", token), token
    assert "-0.000" not in svg


def test_geometry_attributes_are_fixed_point(benchmark, complete_likert):
    root = ET.fromstring(render_svg(layout(benchmark, complete_likert)))
    for attr in ("width", "height"):
        assert re.fullmatch(r"\d+\.\d{3}", root.get(attr))
    path = next(iter(root.iter(f"{SVG_NS}path")))
    coords = re.findall(r"-?\d+(?:\.\d+)?", path.get("d"))
    # All coordinates and radii carry three decimals; the only integer tokens
    # are the grammar-constrained rotation and flag fields of the two arcs.
    decimals = [c for c in coords if "." in c]
    assert len(decimals) == len(coords) - 6
    assert all(c in "01" for c in coords if "." not in c)


def test_title_is_escaped():
    assert 'mini &amp; demo' in fixture_text("golden_card_mini.svg")


def test_svg_declares_version_and_namespace(benchmark, complete_likert):
    svg = render_svg(layout(benchmark, complete_likert))
    assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>\n<svg ')
    assert 'version="1.1"' in svg and 'xmlns="http://www.w3.org/2000/svg"' in svg
    assert svg.endswith("</svg>\n")


def test_legend_and_captions_present(benchmark, complete_likert):
    svg = render_svg(layout(benchmark, complete_likert))
    root = ET.fromstring(svg)
    rects = list(root.iter(f"{SVG_NS}rect"))
    assert len(rects) == 1 + 7  # background + likert legend (5 values, na, not evaluated)
    texts = [t.text for t in root.iter(f"{SVG_NS}text")]
    for label in ("Development", "Assessment", "Mitigation", "Assurance",
                  "Data", "Model", "Code", "System", "5 (excellent)", "not evaluated"):
        assert label in texts


def test_binary_legend_has_four_entries(benchmark):
    doc = scaffold_audit(benchmark, "demo", OutcomeScale.BINARY)
    svg = render_svg(layout(benchmark, doc))
    root = ET.fromstring(svg)
    assert len(list(root.iter(f"{SVG_NS}rect"))) == 1 + 4
