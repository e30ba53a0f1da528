import logging
from typing import List

import numpy as np

from config.settings import (
    DEFAULT_PROJECTION_MAX_COUNT,
    DEFAULT_TOWER_MAX_DEPTH,
    DEFAULT_TOWER_MAX_TOP_SIZE,
)
from relation_core.lattice import invariant_projections, is_invariant
from relation_core.pairs import ProjectionSet, SupportRelation
from tower.embedding import embed_projection
from tower.models import Tower

logger = logging.getLogger("tower.lattice")


def persistent_projections(
    tower: Tower,
    depth: int,
    max_depth: int = DEFAULT_TOWER_MAX_DEPTH,
    max_top_size: int = DEFAULT_TOWER_MAX_TOP_SIZE,
    max_count: int = DEFAULT_PROJECTION_MAX_COUNT,
) -> List[List[ProjectionSet]]:
    """Invariant projections of each level that stay invariant up to depth.

    A projection of level k survives when its image at every level m with
    k < m <= depth is invariant for T_{n_m}.

    Returns:
        One list per level 1..depth, each sorted by (size, members).

    Raises:
        BoundExceededError: If depth, the top level size or the projection
            count of some level is above its bound.
    """
    tower.check_depth(depth, max_depth=max_depth, max_top_size=max_top_size)
    relations = [tower.level_relation(level) for level in range(1, depth + 1)]

    survivors_per_level: List[List[ProjectionSet]] = []
    for level in range(1, depth + 1):
        survivors = []
        candidates = invariant_projections(relations[level - 1], max_count=max_count)
        for projection in candidates:
            if _persists(tower, projection, level, depth, relations):
                survivors.append(projection)
        logger.debug("Level %s keeps %s persistent projections", level, len(survivors))
        survivors_per_level.append(survivors)
    return survivors_per_level


def _persists(
    tower: Tower,
    projection: ProjectionSet,
    level: int,
    depth: int,
    relations: List[SupportRelation],
) -> bool:
    image = projection
    for upper in range(level, depth):
        image = embed_projection(tower.embedding(upper), image)
        if not is_invariant(relations[upper], image):
            return False
    return True


def is_strongly_maximal_level(relation: SupportRelation) -> bool:
    """True iff the relation is a total order: P | P^T is full, P & P^T diagonal."""
    bits = relation.bits
    covers = bool((bits | bits.T).all())
    antisymmetric = bool(np.array_equal(bits & bits.T, np.eye(relation.n, dtype=bool)))
    return covers and antisymmetric
