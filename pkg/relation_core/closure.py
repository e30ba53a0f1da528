import logging
from typing import Iterable, Union

import numpy as np

from relation_core.errors import ContainmentError, SizeMismatchError
from relation_core.pairs import (
    IdealSet,
    Pair,
    PairSet,
    SupportRelation,
    boolean_product,
)

logger = logging.getLogger("relation_core.closure")

PairSource = Union[PairSet, Iterable[Pair]]


def compose(left: PairSet, right: PairSet) -> PairSet:
    """Returns {(i, k) : (i, j) in left and (j, k) in right for some j}."""
    if left.n != right.n:
        raise SizeMismatchError(
            f"Cannot compose relations of sizes {left.n} and {right.n}"
        )
    return PairSet(left.n, boolean_product(left.bits, right.bits))


def reflexive_transitive_closure(pairs: PairSource, n: int) -> SupportRelation:
    """Smallest support relation on {1..n} containing the given pairs."""
    seed = _as_pair_set(pairs, n)
    bits = seed.bits | np.eye(n, dtype=bool)

    rounds = 0
    while True:
        widened = bits | boolean_product(bits, bits)
        rounds += 1
        if np.array_equal(widened, bits):
            break
        bits = widened

    logger.debug("Transitive closure on n=%s stabilised after %s rounds", n, rounds)
    return SupportRelation(n, bits)


def ideal_closure(relation: SupportRelation, seed: PairSource) -> IdealSet:
    """Smallest ideal set of the relation containing the seed pairs.

    Iterates F <- F | P o F | F o P | P o F o P until nothing changes. Because
    P is reflexive and transitive the first round already reaches P o F o P,
    the second round only confirms the fixed point.
    """
    seed_set = _as_pair_set(seed, relation.n)
    outside = seed_set.difference(relation)
    if not outside.is_empty():
        raise ContainmentError(
            f"Seed pairs {outside.pairs} are not in the support relation"
        )

    bits = seed_set.bits.copy()
    while True:
        left = boolean_product(relation.bits, bits)
        widened = bits | left | boolean_product(bits, relation.bits)
        widened |= boolean_product(left, relation.bits)
        if np.array_equal(widened, bits):
            break
        bits = widened

    return IdealSet(relation, PairSet(relation.n, bits))


def generated_support(relation: SupportRelation, generator: PairSource) -> IdealSet:
    """Support of the ideal generated by sum of e_ij over the generator pairs.

    Same closure as `ideal_closure`. g generates F exactly when
    generated_support(P, g) == F.
    """
    return ideal_closure(relation, generator)


def is_principal_witness(
    relation: SupportRelation, ideal: IdealSet, generator: PairSource
) -> bool:
    return generated_support(relation, generator) == ideal


def _as_pair_set(pairs: PairSource, n: int) -> PairSet:
    if isinstance(pairs, PairSet):
        if pairs.n != n:
            raise SizeMismatchError(
                f"Pair-set of size {pairs.n} used on index set of size {n}"
            )
        return pairs.to_pair_set()
    return PairSet.from_pairs(n, pairs)
