"""Invariant projections of a digraph algebra.

A diagonal projection p = sum of e_ii over S is invariant for A(P) exactly when
S is a down-set of P: (i, j) in P and j in S force i in S. Down-sets are the
unions of principal down-sets, so they are generated by closing those unions.
"""

import logging
from typing import List, Set

from config.settings import DEFAULT_PROJECTION_MAX_COUNT
from relation_core.errors import BoundExceededError, LatticeError
from relation_core.pairs import ProjectionSet, SupportRelation

logger = logging.getLogger("relation_core.lattice")


def is_invariant(relation: SupportRelation, projection: ProjectionSet) -> bool:
    if projection.n != relation.n:
        return False
    for i, j in relation.pairs:
        if j in projection.members and i not in projection.members:
            return False
    return True


def invariant_projections(
    relation: SupportRelation, max_count: int = DEFAULT_PROJECTION_MAX_COUNT
) -> List[ProjectionSet]:
    """Lists Lat A(P) as diagonal index sets, smallest first.

    Args:
        relation: Support relation of the algebra.
        max_count: Largest lattice size accepted before giving up.

    Returns:
        Projection sets sorted by (size, sorted members).

    Raises:
        BoundExceededError: If the lattice has more than max_count members.
        LatticeError: If the result is not closed under union and intersection.
    """
    n = relation.n
    principal = [0] * n
    for i, j in relation.pairs:
        principal[j - 1] |= 1 << (i - 1)

    seen: Set[int] = {0}
    frontier = [0]
    while frontier:
        next_frontier = []
        for mask in frontier:
            for index in range(n):
                if mask >> index & 1:
                    continue
                widened = mask | principal[index]
                if widened in seen:
                    continue
                seen.add(widened)
                if len(seen) > max_count:
                    logger.warning(
                        "Invariant projection lattice for n=%s exceeds %s members",
                        n,
                        max_count,
                    )
                    raise BoundExceededError(
                        f"More than {max_count} invariant projections for n={n}"
                    )
                next_frontier.append(widened)
        frontier = next_frontier

    _check_lattice(seen)
    logger.debug("Found %s invariant projections for n=%s", len(seen), n)

    projections = [
        ProjectionSet(n, frozenset(i + 1 for i in range(n) if mask >> i & 1))
        for mask in seen
    ]
    return sorted(projections, key=lambda p: (len(p), p.sorted_members))


def chain_projections(n: int) -> List[ProjectionSet]:
    """The nest {1..j}, j = 0..n."""
    return [ProjectionSet(n, frozenset(range(1, j + 1))) for j in range(n + 1)]


def _check_lattice(masks: Set[int]) -> None:
    for left in masks:
        for right in masks:
            if left | right not in masks or left & right not in masks:
                raise LatticeError(
                    "Invariant projections are not closed under join and meet"
                )
