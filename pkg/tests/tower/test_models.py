import json

import pytest

from relation_core.errors import BoundExceededError, PayloadFormatError
from tower.models import (
    EmbeddingKind,
    EmbeddingSpec,
    LevelMismatchError,
    Tower,
    TowerError,
)


def test_uniform_tower_sizes() -> None:
    tower = Tower.uniform(2, EmbeddingKind.REFINEMENT, 3, 2)

    assert tower.length == 3
    assert tower.level_sizes == [2, 6, 18]
    assert tower.level_size(2) == 6
    assert len(tower.level_relation(2)) == 21


def test_alternating_tower_starts_with_refinement() -> None:
    tower = Tower.alternating(1, 2, 3)

    assert [spec.kind for spec in tower.levels] == [
        EmbeddingKind.REFINEMENT,
        EmbeddingKind.STANDARD,
        EmbeddingKind.REFINEMENT,
    ]
    assert tower.embedding(2) == EmbeddingSpec(EmbeddingKind.STANDARD, 2)


def test_embedding_and_levels_outside_tower() -> None:
    tower = Tower.uniform(2, EmbeddingKind.STANDARD, 2, 1)

    with pytest.raises(LevelMismatchError):
        tower.embedding(2)
    with pytest.raises(LevelMismatchError):
        tower.level_size(3)


def test_invalid_specs() -> None:
    with pytest.raises(TowerError):
        EmbeddingSpec("diagonal", 2)
    with pytest.raises(TowerError):
        EmbeddingSpec(EmbeddingKind.STANDARD, 0)
    with pytest.raises(TowerError):
        Tower(0)


def test_check_depth_bounds() -> None:
    tower = Tower.uniform(2, EmbeddingKind.REFINEMENT, 2, 6)

    tower.check_depth(5)

    with pytest.raises(LevelMismatchError):
        tower.check_depth(8)
    with pytest.raises(BoundExceededError):
        tower.check_depth(6, max_depth=5)
    with pytest.raises(BoundExceededError):
        tower.check_depth(5, max_top_size=16)


def test_tower_payload_survives_json() -> None:
    tower = Tower.alternating(2, 3, 2)

    payload = json.loads(json.dumps(tower.to_payload()))

    assert payload == {
        "base": 2,
        "levels": [
            {"kind": "refinement", "q": 3},
            {"kind": "standard", "q": 3},
        ],
    }
    assert Tower.from_payload(payload) == tower


@pytest.mark.parametrize(
    "payload",
    [
        [],
        {"base": 0},
        {"base": True},
        {"base": 2, "levels": {}},
        {"base": 2, "levels": [3]},
        {"base": 2, "levels": [{"kind": "other", "q": 2}]},
        {"base": 2, "levels": [{"kind": "standard", "q": 0}]},
    ],
)
def test_malformed_tower_payloads(payload) -> None:
    with pytest.raises(PayloadFormatError):
        Tower.from_payload(payload)
