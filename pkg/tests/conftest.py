from __future__ import annotations

from pathlib import Path

import pytest

from syscard import canonical_benchmark, parse_audit

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def benchmark():
    return canonical_benchmark()


@pytest.fixture(scope="session")
def complete_likert():
    return parse_audit(fixture_text("complete_likert.json"))


@pytest.fixture(scope="session")
def complete_binary():
    return parse_audit(fixture_text("complete_binary.json"))


@pytest.fixture(scope="session")
def reaudit_likert():
    return parse_audit(fixture_text("reaudit_likert.json"))
