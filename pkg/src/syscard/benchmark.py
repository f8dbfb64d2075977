"""Benchmark registry: data model, the built-in benchmark, and benchmark files.

A benchmark is an ordered grid of aspects (rows) and categories (columns)
plus a flat list of criteria, each addressed by a fixed-width code
C<category><aspect><ordinal>. The built-in instance carries the full
56-criterion accountability benchmark; user-defined variants load from JSON.
"""
from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from functools import cached_property

from . import criteria as _catalog
from .errors import ParseError, SchemaError

#: Codes hold one digit per field, so no index may exceed 9.
MAX_INDEX = 9


@dataclass(frozen=True)
class Aspect:
    """A row of the framework: which part of the system a criterion concerns."""

    index: int  # 1-based; also the clockwise quarter position on the card
    name: str


@dataclass(frozen=True)
class Category:
    """A column of the framework: the lifecycle role of a criterion."""

    index: int  # 1-based; also the ring position on the card, innermost first
    name: str


@dataclass(frozen=True)
class Criterion:
    """One auditable item, e.g. C345 "Mechanism, Feedback"."""

    code: str
    name: str
    aspect: Aspect
    category: Category
    ordinal: int  # 1-based position within its (category, aspect) cell
    description: str = ""


@dataclass(frozen=True)
class Benchmark:
    """An immutable benchmark: grid axes plus the ordered criterion list.

    Criteria are ordered by (category.index, aspect.index, ordinal), which is
    also the drawing order of the card.
    """

    id: str
    version: str
    aspects: tuple[Aspect, ...]
    categories: tuple[Category, ...]
    criteria: tuple[Criterion, ...]

    @cached_property
    def _by_code(self) -> dict[str, Criterion]:
        return {c.code: c for c in self.criteria}

    @property
    def codes(self) -> frozenset[str]:
        return frozenset(self._by_code)

    def criterion(self, code: str) -> Criterion:
        try:
            return self._by_code[code]
        except KeyError:
            raise KeyError(f"no criterion {code} in benchmark {self.id}") from None

    def aspect_named(self, name: str) -> Aspect:
        for aspect in self.aspects:
            if aspect.name == name:
                return aspect
        raise KeyError(f"no aspect named {name!r} in benchmark {self.id}")

    def category_named(self, name: str) -> Category:
        for category in self.categories:
            if category.name == name:
                return category
        raise KeyError(f"no category named {name!r} in benchmark {self.id}")


def format_code(category_index: int, aspect_index: int, ordinal: int) -> str:
    """Build the criterion code for a grid position, e.g. (3, 4, 6) -> "C346"."""
    for label, value in (
        ("category index", category_index),
        ("aspect index", aspect_index),
        ("ordinal", ordinal),
    ):
        if not isinstance(value, int) or not 1 <= value <= MAX_INDEX:
            raise ValueError(f"{label} must be an integer in 1..{MAX_INDEX}, got {value!r}")
    return f"C{category_index}{aspect_index}{ordinal}"


def cell_criteria(
    benchmark: Benchmark, category: Category | str, aspect: Aspect | str
) -> list[Criterion]:
    """Criteria of one grid cell, in ordinal order.

    ``category`` and ``aspect`` may be given as objects or by name; unknown
    ones raise KeyError.
    """
    if isinstance(category, str):
        category = benchmark.category_named(category)
    elif category not in benchmark.categories:
        raise KeyError(f"category {category.name!r} does not belong to benchmark {benchmark.id}")
    if isinstance(aspect, str):
        aspect = benchmark.aspect_named(aspect)
    elif aspect not in benchmark.aspects:
        raise KeyError(f"aspect {aspect.name!r} does not belong to benchmark {benchmark.id}")
    return [
        c for c in benchmark.criteria if c.category == category and c.aspect == aspect
    ]


@functools.cache
def canonical_benchmark() -> Benchmark:
    """The built-in 56-criterion accountability benchmark."""
    aspects = tuple(Aspect(i + 1, name) for i, name in enumerate(_catalog.ASPECTS))
    categories = tuple(Category(i + 1, name) for i, name in enumerate(_catalog.CATEGORIES))
    crits: list[Criterion] = []
    for category in categories:
        for aspect in aspects:
            for ordinal, (name, description) in enumerate(
                _catalog.CRITERIA[category.name, aspect.name], start=1
            ):
                crits.append(
                    Criterion(
                        code=format_code(category.index, aspect.index, ordinal),
                        name=name,
                        aspect=aspect,
                        category=category,
                        ordinal=ordinal,
                        description=description,
                    )
                )
    return Benchmark(
        id=_catalog.BENCHMARK_ID,
        version=_catalog.BENCHMARK_VERSION,
        aspects=aspects,
        categories=categories,
        criteria=tuple(crits),
    )


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SchemaError(message)


def _axis_from_names(raw, plural: str, singular: str) -> list[str]:
    _require(isinstance(raw, list) and raw, f"{plural} must be a non-empty array of names")
    _require(len(raw) <= MAX_INDEX, f"at most {MAX_INDEX} {plural} are supported, got {len(raw)}")
    names: list[str] = []
    for name in raw:
        _require(isinstance(name, str) and name.strip() != "", f"{plural} names must be non-empty strings")
        _require(name not in names, f"duplicate {singular} name {name!r}")
        names.append(name)
    return names


def load_benchmark(document_text: str) -> Benchmark:
    """Parse a benchmark JSON document (see the file format in the README).

    Criterion codes are derived from grid position; a ``code`` given in the
    file must agree with the derived one. Raises ParseError for malformed
    JSON and SchemaError for invariant violations.
    """
    try:
        raw = json.loads(document_text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from exc
    _require(isinstance(raw, dict), "benchmark document must be a JSON object")
    unknown = set(raw) - {"id", "version", "aspects", "categories", "criteria"}
    _require(not unknown, f"unknown benchmark fields: {', '.join(sorted(unknown))}")
    for key in ("id", "version"):
        _require(isinstance(raw.get(key), str) and raw[key] != "", f"{key!r} must be a non-empty string")

    aspect_names = _axis_from_names(raw.get("aspects"), "aspects", "aspect")
    category_names = _axis_from_names(raw.get("categories"), "categories", "category")
    aspects = tuple(Aspect(i + 1, n) for i, n in enumerate(aspect_names))
    categories = tuple(Category(i + 1, n) for i, n in enumerate(category_names))
    aspect_by_name = {a.name: a for a in aspects}
    category_by_name = {c.name: c for c in categories}

    raw_criteria = raw.get("criteria")
    _require(isinstance(raw_criteria, list), "'criteria' must be an array")
    cells: dict[tuple[int, int], dict[int, Criterion]] = {}
    for position, item in enumerate(raw_criteria):
        label = f"criteria[{position}]"
        _require(isinstance(item, dict), f"{label} must be an object")
        unknown = set(item) - {"name", "aspect", "category", "ordinal", "description", "code"}
        _require(not unknown, f"{label}: unknown fields: {', '.join(sorted(unknown))}")
        name = item.get("name")
        _require(
            isinstance(name, str) and name.strip() != "",
            f"{label}: 'name' must be a non-empty string",
        )
        label = f"criterion {name!r}"
        _require(item.get("aspect") in aspect_by_name, f"{label}: unknown aspect {item.get('aspect')!r}")
        _require(
            item.get("category") in category_by_name,
            f"{label}: unknown category {item.get('category')!r}",
        )
        aspect = aspect_by_name[item["aspect"]]
        category = category_by_name[item["category"]]
        ordinal = item.get("ordinal")
        _require(
            isinstance(ordinal, int) and not isinstance(ordinal, bool) and 1 <= ordinal <= MAX_INDEX,
            f"{label}: 'ordinal' must be an integer in 1..{MAX_INDEX}",
        )
        description = item.get("description", "")
        _require(isinstance(description, str), f"{label}: 'description' must be a string")
        code = format_code(category.index, aspect.index, ordinal)
        declared = item.get("code")
        if declared is not None:
            _require(
                declared == code,
                f"{label}: code {declared!r} does not match position "
                f"(category {category.index}, aspect {aspect.index}, ordinal {ordinal} => {code})",
            )
        cell = cells.setdefault((category.index, aspect.index), {})
        _require(ordinal not in cell, f"duplicate code {code}")
        cell[ordinal] = Criterion(
            code=code,
            name=name,
            aspect=aspect,
            category=category,
            ordinal=ordinal,
            description=description,
        )

    for (cat_idx, asp_idx), cell in sorted(cells.items()):
        ordinals = sorted(cell)
        if ordinals != list(range(1, len(ordinals) + 1)):
            missing = next(i for i in range(1, len(ordinals) + 1) if i not in cell)
            raise SchemaError(
                f"cell ({category_names[cat_idx - 1]}, {aspect_names[asp_idx - 1]}) has no "
                f"ordinal {missing}; ordinals must be contiguous from 1"
            )

    ordered = tuple(
        cells[key][ordinal]
        for key in sorted(cells)
        for ordinal in sorted(cells[key])
    )
    return Benchmark(
        id=raw["id"],
        version=raw["version"],
        aspects=aspects,
        categories=categories,
        criteria=ordered,
    )


def serialize_benchmark(benchmark: Benchmark) -> str:
    """Canonical JSON text for a benchmark; loadable by load_benchmark."""
    doc = {
        "id": benchmark.id,
        "version": benchmark.version,
        "aspects": [a.name for a in benchmark.aspects],
        "categories": [c.name for c in benchmark.categories],
        "criteria": [
            {
                "code": c.code,
                "name": c.name,
                "aspect": c.aspect.name,
                "category": c.category.name,
                "ordinal": c.ordinal,
                "description": c.description,
            }
            for c in benchmark.criteria
        ],
    }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
