"""Orders on depth-k words and the ideal sets they carry."""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, List, Sequence, Tuple

import numpy as np

from config.settings import DEFAULT_ENUMERATION_MAX_SIZE, DEFAULT_GROUPOID_MAX_WORDS
from groupoid_spectrum.errors import DepthMismatchError, SpectrumError
from groupoid_spectrum.gsets import Arrow
from groupoid_spectrum.words import (
    Alphabet,
    Word,
    all_words,
    check_alphabet,
    check_word,
    index_table,
)
from relation_core.closure import compose
from relation_core.errors import ContainmentError
from relation_core.ideals import enumerate_ideals
from relation_core.pairs import PairSet, SupportRelation
from tower.models import EmbeddingKind

logger = logging.getLogger("groupoid_spectrum.orders")

Comparator = Callable[[Word, Word], bool]


class OrderName:
    LEX = "lex"
    REVLEX = "revlex"
    ALTERNATION = "alternation"

    ALL = (LEX, REVLEX, ALTERNATION)


def lex_leq(left: Word, right: Word) -> bool:
    """left <= right when equal, or the first differing coordinate is smaller."""
    _require_equal_depth(left, right)
    return tuple(left) <= tuple(right)


def revlex_leq(left: Word, right: Word) -> bool:
    """left <= right when equal, or the rightmost differing coordinate is smaller."""
    _require_equal_depth(left, right)
    return tuple(reversed(left)) <= tuple(reversed(right))


def tower_comparator(alphabet: Sequence[int], kinds: Sequence[str]) -> Comparator:
    """Order of the level indices that the words name under the given kinds.

    All-refinement kinds give lex_leq, all-standard kinds give revlex_leq,
    mixed kinds give the order of an alternation tower.
    """
    table = index_table(alphabet, kinds)

    def comparator(left: Word, right: Word) -> bool:
        _require_equal_depth(left, right)
        return table[tuple(left)] <= table[tuple(right)]

    return comparator


def kinds_for_order(
    order_name: str, depth: int, tower_kinds: Sequence[str] = ()
) -> Tuple[str, ...]:
    """Embedding kinds whose index identification turns the order into T_N."""
    if order_name == OrderName.LEX:
        return (EmbeddingKind.REFINEMENT,) * (depth - 1)
    if order_name == OrderName.REVLEX:
        return (EmbeddingKind.STANDARD,) * (depth - 1)
    if order_name == OrderName.ALTERNATION:
        if len(tower_kinds) != depth - 1:
            raise DepthMismatchError(
                f"Alternation order at depth {depth} needs {depth - 1} embedding kinds"
            )
        return tuple(tower_kinds)
    raise SpectrumError(f"Unknown order: {order_name!r}")


def comparator_for(
    order_name: str, alphabet: Sequence[int], tower_kinds: Sequence[str] = ()
) -> Comparator:
    if order_name == OrderName.LEX:
        return lex_leq
    if order_name == OrderName.REVLEX:
        return revlex_leq
    kinds = kinds_for_order(order_name, len(alphabet), tower_kinds)
    return tower_comparator(alphabet, kinds)


@dataclass(frozen=True)
class OrderRelation:
    """A set of arrows of one depth containing the unit space."""

    alphabet: Alphabet
    pairs: FrozenSet[Arrow]

    def __post_init__(self) -> None:
        alphabet = check_alphabet(self.alphabet)
        pairs = frozenset((tuple(u), tuple(v)) for u, v in self.pairs)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "pairs", pairs)
        for u, v in pairs:
            check_word(u, alphabet)
            check_word(v, alphabet)
        missing = [w for w in all_words(alphabet) if (w, w) not in pairs]
        if missing:
            raise SpectrumError(f"Order misses the units of {missing[:3]}")

    @property
    def depth(self) -> int:
        return len(self.alphabet)

    def to_pair_set(self) -> PairSet:
        """Bit-matrix view with words numbered in lexicographic order."""
        return arrows_to_pair_set(self.alphabet, self.pairs)

    def to_relation(self, kinds: Sequence[str]) -> SupportRelation:
        """Support relation on 1..N through the index identification of kinds."""
        table = index_table(self.alphabet, kinds)
        return SupportRelation.from_pairs(
            len(table), [(table[u], table[v]) for u, v in self.pairs]
        )


@dataclass
class PartialOrderReport:
    is_partial: bool
    is_total: bool
    is_equivalence: bool


def order_from_comparator(
    alphabet: Sequence[int],
    comparator: Comparator,
    max_words: int = DEFAULT_GROUPOID_MAX_WORDS,
) -> OrderRelation:
    """{(u, v) : u <= v} over all words of the alphabet.

    Raises:
        SpectrumError: If the comparator does not define a total order.
    """
    words = all_words(alphabet, max_words)
    order = OrderRelation(
        tuple(alphabet),
        frozenset((u, v) for u in words for v in words if comparator(u, v)),
    )
    report = check_partial_order(order)
    if not (report.is_partial and report.is_total):
        raise SpectrumError("Comparator does not define a total order")
    return order


def check_partial_order(order: OrderRelation) -> PartialOrderReport:
    """Evaluates P o P <= P, P & P^-1 = G0 and P | P^-1 = G on the finite sets."""
    bits = order.to_pair_set()
    inverse = bits.transpose()
    diagonal = PairSet(bits.n, np.eye(bits.n, dtype=bool))
    full = PairSet(bits.n, np.ones((bits.n, bits.n), dtype=bool))

    transitive = compose(bits, bits).issubset(bits)
    is_partial = transitive and bits.intersection(inverse) == diagonal
    is_total = is_partial and bits.union(inverse) == full
    is_equivalence = transitive and bits == inverse
    return PartialOrderReport(
        is_partial=is_partial, is_total=is_total, is_equivalence=is_equivalence
    )


def unit_space_order(alphabet: Sequence[int]) -> OrderRelation:
    return OrderRelation(tuple(alphabet), frozenset((w, w) for w in all_words(alphabet)))


def full_order(alphabet: Sequence[int]) -> OrderRelation:
    words = all_words(alphabet)
    return OrderRelation(tuple(alphabet), frozenset((u, v) for u in words for v in words))


def ideal_set_check(order: OrderRelation, ideal_set: FrozenSet[Arrow]) -> bool:
    """True iff P o F o P is contained in F.

    Raises:
        ContainmentError: If F is not contained in P.
    """
    candidate = arrows_to_pair_set(order.alphabet, ideal_set)
    relation = order.to_pair_set()
    if not candidate.issubset(relation):
        raise ContainmentError("Ideal set candidate is not contained in the order")
    return compose(compose(relation, candidate), relation).issubset(candidate)


def spectrum_determines(
    first: FrozenSet[Arrow], second: FrozenSet[Arrow]
) -> bool:
    """Ideals with equal ideal sets are equal; at finite depth this is set equality."""
    return frozenset(first) == frozenset(second)


def enumerate_ideal_sets(
    order: OrderRelation,
    kinds: Sequence[str],
    max_size: int = DEFAULT_ENUMERATION_MAX_SIZE,
) -> List[FrozenSet[Arrow]]:
    """Ideal sets of the order, found as ideals of its image on 1..N."""
    table = index_table(order.alphabet, kinds)
    words_by_index: Dict[int, Word] = {index: word for word, index in table.items()}
    relation = order.to_relation(kinds)
    ideal_sets = [
        frozenset((words_by_index[i], words_by_index[j]) for i, j in ideal.pairs)
        for ideal in enumerate_ideals(relation, max_size=max_size)
    ]
    logger.debug(
        "Order at depth %s has %s ideal sets", order.depth, len(ideal_sets)
    )
    return ideal_sets


def arrows_to_pair_set(alphabet: Sequence[int], arrows: FrozenSet[Arrow]) -> PairSet:
    words = all_words(alphabet)
    position = {word: index for index, word in enumerate(words, start=1)}
    try:
        pairs = [(position[tuple(u)], position[tuple(v)]) for u, v in arrows]
    except KeyError as error:
        raise DepthMismatchError(f"Word {error.args[0]} is not over {tuple(alphabet)}")
    return PairSet.from_pairs(len(words), pairs)


def _require_equal_depth(left: Word, right: Word) -> None:
    if len(left) != len(right):
        raise DepthMismatchError(
            f"Cannot compare words of depth {len(left)} and {len(right)}"
        )
