"""Pytest configuration and fixtures shared by every test package."""

import json
from pathlib import Path
from typing import Any, Callable

import pytest

from relation_core.pairs import IdealSet, PairSet, SupportRelation, upper_triangular

# Rows 1 and 2 are full from the diagonal on, rows 3 to 6 only reach columns
# 6 and 7, and row 7 holds the last diagonal entry.
T7_STAIRCASE_PAIRS = (
    [(1, j) for j in range(1, 8)]
    + [(2, j) for j in range(2, 8)]
    + [(i, j) for i in range(3, 7) for j in (6, 7)]
    + [(7, 7)]
)


def pytest_configure(config):
    """Register custom pytest markers."""
    config.addinivalue_line(
        "markers",
        "exhaustive: sweeps over every ideal of a bounded family, slower than unit tests",
    )


@pytest.fixture
def t7() -> SupportRelation:
    return upper_triangular(7)


@pytest.fixture
def t7_staircase_ideal(t7: SupportRelation) -> IdealSet:
    return IdealSet(t7, PairSet.from_pairs(7, T7_STAIRCASE_PAIRS))


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], str]:
    """Writes a JSON document under tmp_path and returns its path."""

    def _write(name: str, payload: Any) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return _write
