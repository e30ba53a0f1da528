import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relation_core.closure import compose, ideal_closure
from relation_core.errors import IndexRangeError
from relation_core.ideals import enumerate_ideals
from relation_core.pairs import IdealSet, PairSet, ProjectionSet, SupportRelation, upper_triangular
from tower.embedding import (
    embed_index,
    embed_pairs,
    embed_projection,
    embed_unit,
    lift_ideal,
    lift_support,
    lift_then_intersect,
    pullback_ideal,
)
from tower.models import EmbeddingKind, EmbeddingSpec, LevelMismatchError
from tests.strategies import embedding_specs, sizes

REFINEMENT_6 = EmbeddingSpec(EmbeddingKind.REFINEMENT, 6)
STANDARD_6 = EmbeddingSpec(EmbeddingKind.STANDARD, 6)


def test_refinement_amplifies_each_entry_by_an_identity_block() -> None:
    assert embed_unit(REFINEMENT_6, 2, 1, 2) == [(t, 6 + t) for t in range(1, 7)]
    assert embed_unit(REFINEMENT_6, 2, 2, 2) == [(6 + t, 6 + t) for t in range(1, 7)]


def test_standard_places_block_diagonal_copies() -> None:
    assert embed_unit(STANDARD_6, 2, 1, 2) == [(1 + 2 * t, 2 + 2 * t) for t in range(6)]
    assert embed_unit(STANDARD_6, 2, 2, 1) == [(2 + 2 * t, 1 + 2 * t) for t in range(6)]


def test_embed_index() -> None:
    assert embed_index(EmbeddingSpec(EmbeddingKind.REFINEMENT, 3), 2, 2) == [4, 5, 6]
    assert embed_index(EmbeddingSpec(EmbeddingKind.STANDARD, 3), 2, 2) == [2, 4, 6]


def test_embed_unit_rejects_indices_outside_level() -> None:
    with pytest.raises(IndexRangeError):
        embed_unit(REFINEMENT_6, 2, 3, 1)


@pytest.mark.parametrize("spec", [REFINEMENT_6, STANDARD_6])
def test_embed_pairs_is_the_union_of_unit_images(spec: EmbeddingSpec) -> None:
    relation = upper_triangular(2)

    image = embed_pairs(spec, relation)

    expected = sorted(
        pair for i, j in relation.pairs for pair in embed_unit(spec, 2, i, j)
    )
    assert image.n == 12
    assert image.pairs == expected


@pytest.mark.parametrize("kind", EmbeddingKind.ALL)
def test_both_embeddings_map_t2_into_t4(kind: str) -> None:
    lifted = lift_support(EmbeddingSpec(kind, 2), upper_triangular(2))

    assert lifted.n == 4
    assert lifted.issubset(upper_triangular(4))


def test_embed_projection() -> None:
    projection = ProjectionSet(2, frozenset({1}))

    refined = embed_projection(EmbeddingSpec(EmbeddingKind.REFINEMENT, 2), projection)
    standard = embed_projection(EmbeddingSpec(EmbeddingKind.STANDARD, 2), projection)

    assert refined.sorted_members == [1, 2]
    assert standard.sorted_members == [1, 3]


def test_lift_ideal_of_a_corner() -> None:
    spec = EmbeddingSpec(EmbeddingKind.STANDARD, 2)
    relation = upper_triangular(2)
    ideal = ideal_closure(relation, [(2, 2)])

    lifted = lift_ideal(spec, relation, ideal, upper_triangular(4))

    assert lifted == ideal_closure(upper_triangular(4), [(2, 2), (4, 4)])


def test_lift_ideal_requires_matching_parent() -> None:
    spec = EmbeddingSpec(EmbeddingKind.STANDARD, 2)
    ideal = IdealSet(upper_triangular(3), PairSet.empty(3))

    with pytest.raises(LevelMismatchError):
        lift_ideal(spec, upper_triangular(2), ideal, upper_triangular(4))


def test_pullback_requires_next_level_size() -> None:
    spec = EmbeddingSpec(EmbeddingKind.STANDARD, 2)
    ideal = IdealSet(upper_triangular(3), PairSet.empty(3))

    with pytest.raises(LevelMismatchError):
        pullback_ideal(spec, upper_triangular(2), ideal)


@pytest.mark.exhaustive
@pytest.mark.parametrize("kind", EmbeddingKind.ALL)
@pytest.mark.parametrize("n, q", [(2, 2), (2, 3), (3, 2), (4, 2), (6, 2)])
def test_lift_then_intersect_recovers_triangular_ideals(kind: str, n: int, q: int) -> None:
    spec = EmbeddingSpec(kind, q)
    relation = upper_triangular(n)
    next_relation = upper_triangular(n * q)

    for ideal in enumerate_ideals(relation):
        assert lift_then_intersect(spec, relation, ideal, next_relation) == ideal


def test_lift_then_intersect_enlarges_ideal_of_a_non_nest() -> None:
    relation = SupportRelation.from_pairs(3, [(1, 1), (2, 2), (3, 3), (1, 3)])
    ideal = IdealSet(relation, PairSet.from_pairs(3, [(2, 2)]))

    recovered = lift_then_intersect(
        EmbeddingSpec(EmbeddingKind.STANDARD, 2), relation, ideal, upper_triangular(6)
    )

    assert recovered.pairs == [(1, 3), (2, 2)]


def _unit_image(spec: EmbeddingSpec, n: int, i: int, j: int) -> PairSet:
    return PairSet.from_pairs(n * spec.multiplicity, embed_unit(spec, n, i, j))


@given(embedding_specs(), sizes(4))
@settings(max_examples=50, deadline=None)
def test_images_of_distinct_units_are_disjoint(spec: EmbeddingSpec, n: int) -> None:
    units = list(itertools.product(range(1, n + 1), repeat=2))

    images = {unit: set(embed_unit(spec, n, *unit)) for unit in units}

    for first, second in itertools.combinations(units, 2):
        assert images[first].isdisjoint(images[second])
    assert all(len(image) == spec.multiplicity for image in images.values())


@given(embedding_specs(), sizes(4), st.data())
@settings(max_examples=80, deadline=None)
def test_unit_images_multiply_like_units(spec: EmbeddingSpec, n: int, data) -> None:
    index = st.integers(min_value=1, max_value=n)
    i, j, k, m = (data.draw(index) for _ in range(4))

    product = compose(_unit_image(spec, n, i, j), _unit_image(spec, n, k, m))

    if j == k:
        assert product == _unit_image(spec, n, i, m)
    else:
        assert product.is_empty()
