from fractions import Fraction

import pytest

from groupoid_spectrum.gsets import GSet
from groupoid_spectrum.orders import (
    enumerate_ideal_sets,
    lex_leq,
    order_from_comparator,
    revlex_leq,
)
from groupoid_spectrum.principal import (
    Listing,
    basis_listing,
    generated_ideal_support,
    principal_generator,
)
from relation_core.errors import ContainmentError, InvalidIdealError
from tower.models import EmbeddingKind

REFINEMENT = EmbeddingKind.REFINEMENT
STANDARD = EmbeddingKind.STANDARD


def test_depth_two_generator_terms_and_compressions() -> None:
    order = order_from_comparator((2, 2), lex_leq)
    ideal_set = frozenset(
        {((1, 1), (2, 1)), ((1, 1), (2, 2)), ((1, 2), (2, 1)), ((1, 2), (2, 2))}
    )

    result = principal_generator(order, ideal_set)

    coefficients = [coefficient for _, coefficient in result.generator.terms]
    assert coefficients == [Fraction(1, 2**k) for k in range(1, 5)]
    assert result.compression_holds
    assert result.generates_ideal
    assert result.verified


def test_level_major_listing_deletes_subordinates() -> None:
    order = order_from_comparator((2, 2), lex_leq)
    ideal_set = frozenset(
        {((1, 1), (2, 1)), ((1, 1), (2, 2)), ((1, 2), (2, 1)), ((1, 2), (2, 2))}
    )

    result = principal_generator(order, ideal_set, listing=Listing.LEVEL_MAJOR)

    assert result.kept_units == [
        GSet.basis((2,), (1,), (2,)),
        GSet.basis((2, 2), (1, 1), (2, 2)),
        GSet.basis((2, 2), (1, 2), (2, 1)),
    ]
    assert [check.holds for check in result.compression_checks] == [False, True, True]
    assert result.generates_ideal


def test_level_major_compression_can_fail_while_generation_holds() -> None:
    order = order_from_comparator((2, 2), lex_leq)

    result = principal_generator(order, order.pairs, listing=Listing.LEVEL_MAJOR)

    assert result.generates_ideal
    assert not result.compression_holds
    assert principal_generator(order, order.pairs).verified


def test_basis_listing_is_level_major() -> None:
    order = order_from_comparator((2, 2), lex_leq)

    units = basis_listing(order, order.pairs, Listing.LEVEL_MAJOR)

    assert [unit.depth for unit in units[:3]] == [1, 1, 1]
    assert all(unit.depth == 2 for unit in units[3:])
    assert len(units) == 3 + len(order.pairs)

    with pytest.raises(ValueError):
        basis_listing(order, order.pairs, "random")


def test_empty_ideal_set_has_zero_generator() -> None:
    order = order_from_comparator((2, 2), lex_leq)

    result = principal_generator(order, frozenset())

    assert result.generator.terms == ()
    assert result.generated_support == frozenset()
    assert result.verified


def test_non_ideal_sets_are_rejected() -> None:
    order = order_from_comparator((2,), lex_leq)

    with pytest.raises(InvalidIdealError):
        principal_generator(order, frozenset({((1,), (1,))}))
    with pytest.raises(ContainmentError):
        principal_generator(order, frozenset({((2,), (1,))}))


@pytest.mark.parametrize("listing", Listing.ALL)
def test_every_depth_two_ideal_set_generates_itself(listing: str) -> None:
    order = order_from_comparator((2, 2), lex_leq)

    for ideal_set in enumerate_ideal_sets(order, (REFINEMENT,)):
        result = principal_generator(order, ideal_set, listing=listing)

        assert result.generates_ideal
        union = set()
        for piece in result.pieces:
            assert union.isdisjoint(piece.pairs)
            union |= piece.pairs
        assert union == ideal_set


def test_revlex_ideal_sets_generate_themselves() -> None:
    order = order_from_comparator((2, 2), revlex_leq)

    for ideal_set in enumerate_ideal_sets(order, (STANDARD,)):
        assert principal_generator(order, ideal_set).verified


@pytest.mark.exhaustive
def test_every_depth_three_ideal_set_has_a_verified_generator() -> None:
    order = order_from_comparator((2, 2, 2), lex_leq)
    ideal_sets = enumerate_ideal_sets(order, (REFINEMENT, REFINEMENT))

    assert len(ideal_sets) == 4862
    for ideal_set in ideal_sets:
        result = principal_generator(order, ideal_set)
        assert result.verified
        assert generated_ideal_support(order, result.generator) == ideal_set


@pytest.mark.exhaustive
def test_level_major_deletion_covers_depth_three_ideal_sets() -> None:
    order = order_from_comparator((2, 2, 2), lex_leq)

    for ideal_set in enumerate_ideal_sets(order, (REFINEMENT, REFINEMENT))[::17]:
        result = principal_generator(order, ideal_set, listing=Listing.LEVEL_MAJOR)

        union = set()
        for piece in result.pieces:
            assert union.isdisjoint(piece.pairs)
            union |= piece.pairs
        assert union == ideal_set
        assert result.generates_ideal
