"""Ideal enumeration and principal generators for digraph algebras."""

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import DEFAULT_ENUMERATION_MAX_SIZE
from relation_core.closure import ideal_closure
from relation_core.errors import BoundExceededError, RelationError
from relation_core.pairs import (
    IdealSet,
    Pair,
    PairSet,
    SupportRelation,
    upper_triangular,
)

logger = logging.getLogger("relation_core.ideals")

FILTERING_MAX_PAIRS = 20


class EnumerationMethod:
    FILTER = "filter"
    CLOSURE = "closure"


def enumerate_ideals(
    relation: SupportRelation,
    max_size: int = DEFAULT_ENUMERATION_MAX_SIZE,
    method: Optional[str] = None,
) -> List[IdealSet]:
    """Lists every ideal set of the relation, smallest first.

    Relations with at most FILTERING_MAX_PAIRS pairs are searched by filtering
    all subsets of P; larger ones by closing unions of principal ideals,
    which only visits actual ideals. Both strategies return the same list.

    Args:
        relation: Support relation of the digraph algebra.
        max_size: Largest matrix size accepted; enumeration is exponential.
        method: Force EnumerationMethod.FILTER or EnumerationMethod.CLOSURE.

    Returns:
        Ideal sets sorted by (size, row-major pair list), the empty ideal first.

    Raises:
        BoundExceededError: If relation.n exceeds max_size.
    """
    if relation.n > max_size:
        logger.warning(
            "Refusing to enumerate ideals for n=%s (bound %s)", relation.n, max_size
        )
        raise BoundExceededError(
            f"Ideal enumeration is limited to n <= {max_size}, got n={relation.n}"
        )

    pairs = relation.pairs
    principal_masks = _principal_masks(relation, pairs)

    if method is None:
        method = (
            EnumerationMethod.FILTER
            if len(pairs) <= FILTERING_MAX_PAIRS
            else EnumerationMethod.CLOSURE
        )

    if method == EnumerationMethod.FILTER:
        masks = _enumerate_by_filtering(principal_masks)
    elif method == EnumerationMethod.CLOSURE:
        masks = _enumerate_by_closure(principal_masks)
    else:
        raise ValueError(f"Unknown enumeration method: {method}")

    logger.debug(
        "Enumerated %s ideals of a relation with %s pairs using %s",
        len(masks),
        len(pairs),
        method,
    )

    ideals = [
        IdealSet(relation, _pair_set_from_mask(relation.n, pairs, mask))
        for mask in masks
    ]
    return sorted(ideals, key=ideal_sort_key)


def ideal_sort_key(ideal: IdealSet) -> Tuple[int, List[Pair]]:
    return (len(ideal), ideal.pairs)


def full_sum_generator(ideal: IdealSet) -> PairSet:
    """Support of g = sum of e_ij over all (i, j) in F."""
    return ideal.support


def corner_generator(relation: SupportRelation, ideal: IdealSet) -> PairSet:
    """Smallest generating set of the ideal: the corners of its L-blocks.

    A pair x of F generates y when y lies in P o {x} o P. For antisymmetric P
    this order is a partial order and the corners are exactly the pairs
    (i, k) of F with no j != i such that (i, j) in P and (j, k) in F, and no
    j != k such that (i, j) in F and (j, k) in P. When P has cycles, pairs
    that generate each other form classes; one representative, the first in
    row-major order, is kept from every minimal class.
    """
    if ideal.parent != relation:
        raise RelationError("Ideal does not belong to the given support relation")

    pairs = ideal.pairs
    if not pairs:
        return PairSet.empty(relation.n)

    rows = np.array([i - 1 for i, _ in pairs])
    cols = np.array([k - 1 for _, k in pairs])

    # generates[x, y]: pair x generates pair y, i.e. (i_y, i_x) and (k_x, k_y) in P
    generates = relation.bits[np.ix_(rows, rows)].T & relation.bits[np.ix_(cols, cols)]
    strictly_below = generates & ~generates.T
    minimal = ~strictly_below.any(axis=0)
    equivalent = generates & generates.T

    corners = [
        pairs[y]
        for y in range(len(pairs))
        if minimal[y] and not equivalent[:y, y].any()
    ]
    return PairSet.from_pairs(relation.n, corners)


def ideal_from_alpha(n: int, alpha: Sequence[int]) -> IdealSet:
    """The ideal I[alpha] of T_n: entries vanish whenever i > alpha(j).

    Args:
        n: Matrix size.
        alpha: Values alpha(0), ..., alpha(n) of a non-decreasing map with
            alpha(k) <= k.
    """
    if len(alpha) != n + 1:
        raise RelationError(f"alpha needs {n + 1} values, got {len(alpha)}")
    for k in range(n + 1):
        if not 0 <= alpha[k] <= k:
            raise RelationError(f"alpha({k}) = {alpha[k]} is outside 0..{k}")
        if k > 0 and alpha[k] < alpha[k - 1]:
            raise RelationError("alpha must be non-decreasing")

    pairs = [(i, j) for j in range(1, n + 1) for i in range(1, alpha[j] + 1)]
    return IdealSet(upper_triangular(n), PairSet.from_pairs(n, pairs))


def enumerate_order_homomorphisms(n: int) -> List[Tuple[int, ...]]:
    """All non-decreasing alpha on {0..n} with alpha(k) <= k."""
    result: List[Tuple[int, ...]] = []
    for tail in itertools.product(*(range(k + 1) for k in range(1, n + 1))):
        alpha = (0,) + tail
        if all(alpha[k - 1] <= alpha[k] for k in range(1, n + 1)):
            result.append(alpha)
    return result


def _principal_masks(relation: SupportRelation, pairs: List[Pair]) -> List[int]:
    position: Dict[Pair, int] = {pair: index for index, pair in enumerate(pairs)}
    masks = []
    for pair in pairs:
        closed = ideal_closure(relation, [pair])
        mask = 0
        for member in closed.pairs:
            mask |= 1 << position[member]
        masks.append(mask)
    return masks


def _enumerate_by_filtering(principal_masks: List[int]) -> List[int]:
    count = len(principal_masks)
    found = []
    for mask in range(1 << count):
        if all(
            principal_masks[bit] & ~mask == 0
            for bit in range(count)
            if mask >> bit & 1
        ):
            found.append(mask)
    return found


def _enumerate_by_closure(principal_masks: List[int]) -> List[int]:
    seen = {0}
    frontier = [0]
    while frontier:
        next_frontier = []
        for mask in frontier:
            for bit, principal in enumerate(principal_masks):
                if mask >> bit & 1:
                    continue
                widened = mask | principal
                if widened not in seen:
                    seen.add(widened)
                    next_frontier.append(widened)
        frontier = next_frontier
    return sorted(seen)


def _pair_set_from_mask(n: int, pairs: List[Pair], mask: int) -> PairSet:
    return PairSet.from_pairs(
        n, [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]
    )
