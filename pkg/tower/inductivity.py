"""Inductivity of ideals along a tower and the lift-then-intersect property."""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import (
    DEFAULT_ENUMERATION_MAX_SIZE,
    DEFAULT_TOWER_MAX_DEPTH,
    DEFAULT_TOWER_MAX_TOP_SIZE,
)
from relation_core.closure import ideal_closure
from relation_core.errors import InvalidRelationError
from relation_core.ideals import enumerate_ideals
from relation_core.pairs import IdealSet, Pair, PairSet, SupportRelation, upper_triangular
from tower.embedding import embed_pairs, lift_then_intersect
from tower.models import (
    EmbeddingKind,
    EmbeddingSpec,
    LevelMismatchError,
    Tower,
    TowerError,
)

logger = logging.getLogger("tower.inductivity")


@dataclass
class InductivityReport:
    """Pullbacks of a top-level ideal and whether they regenerate it."""

    depth: int
    pullbacks: List[IdealSet]
    regenerated: IdealSet
    holds: bool


@dataclass
class EnlargementWitness:
    """An ideal that lift-then-intersect strictly enlarges."""

    relation: SupportRelation
    ideal: IdealSet
    spec: EmbeddingSpec
    recovered: IdealSet

    @property
    def added_pairs(self) -> List[Pair]:
        return self.recovered.support.difference(self.ideal.support).pairs


def embed_through(tower: Tower, pair_set: PairSet, from_level: int, to_level: int) -> PairSet:
    """Image of a level-from_level pair-set at level to_level."""
    if pair_set.n != tower.level_size(from_level):
        raise LevelMismatchError(
            f"Pair-set of size {pair_set.n} does not live at level {from_level}"
        )
    image = pair_set
    for level in range(from_level, to_level):
        image = embed_pairs(tower.embedding(level), image)
    return image


def lift_through(tower: Tower, ideal: IdealSet, from_level: int, to_level: int) -> IdealSet:
    """Ideal of level to_level generated by the image of a lower-level ideal."""
    image = embed_through(tower, ideal.support, from_level, to_level)
    return ideal_closure(tower.level_relation(to_level), image)


def generate_at_level(
    tower: Tower, level: int, seed: Iterable[Pair], depth: int
) -> IdealSet:
    """Ideal generated by seed pairs at one level, lifted to level depth."""
    start = ideal_closure(tower.level_relation(level), list(seed))
    return lift_through(tower, start, level, depth)


def pullback_through(
    tower: Tower, top_ideal: IdealSet, to_level: int, depth: int
) -> IdealSet:
    """Units of level to_level whose image at level depth lies in the ideal."""
    relation = tower.level_relation(to_level)
    n = relation.n
    kept = []
    for pair in relation.pairs:
        image = embed_through(tower, PairSet.from_pairs(n, [pair]), to_level, depth)
        if image.issubset(top_ideal.support):
            kept.append(pair)
    return IdealSet(relation, PairSet.from_pairs(n, kept))


def inductivity_report(
    tower: Tower,
    top_ideal: IdealSet,
    depth: int,
    max_depth: int = DEFAULT_TOWER_MAX_DEPTH,
    max_top_size: int = DEFAULT_TOWER_MAX_TOP_SIZE,
) -> InductivityReport:
    """Pulls the ideal back to every level and regenerates it from the pieces.

    Raises:
        LevelMismatchError: If top_ideal is not an ideal of T_{n_depth}.
    """
    tower.check_depth(depth, max_depth=max_depth, max_top_size=max_top_size)
    top_relation = tower.level_relation(depth)
    if top_ideal.parent != top_relation:
        raise LevelMismatchError(
            f"Ideal of size {top_ideal.n} is not an ideal of level {depth}"
        )

    pullbacks = [
        pullback_through(tower, top_ideal, level, depth) for level in range(1, depth + 1)
    ]

    images = PairSet.empty(top_relation.n)
    for level, piece in enumerate(pullbacks, start=1):
        images = images.union(embed_through(tower, piece.support, level, depth))
    regenerated = ideal_closure(top_relation, images)

    holds = regenerated == top_ideal
    logger.info(
        "Inductivity at depth %s: pullback sizes %s, holds=%s",
        depth,
        [len(piece) for piece in pullbacks],
        holds,
    )
    return InductivityReport(
        depth=depth, pullbacks=pullbacks, regenerated=regenerated, holds=holds
    )


def inductivity_check(tower: Tower, top_ideal: IdealSet, depth: int) -> bool:
    return inductivity_report(tower, top_ideal, depth).holds


def sub_relations_of_triangular(n: int) -> List[SupportRelation]:
    """Every support relation P with D_n <= P <= T_n, row-major subset order."""
    off_diagonal = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    diagonal = [(i, i) for i in range(1, n + 1)]
    relations = []
    for count in range(len(off_diagonal) + 1):
        for chosen in itertools.combinations(off_diagonal, count):
            try:
                relations.append(SupportRelation.from_pairs(n, diagonal + list(chosen)))
            except InvalidRelationError:
                continue
    return relations


def find_enlargement_witness(
    seed: int = 0,
    max_size: int = 3,
    multiplicities: Sequence[int] = (2, 3),
    kind: str = EmbeddingKind.STANDARD,
    enumeration_max_size: int = DEFAULT_ENUMERATION_MAX_SIZE,
) -> Optional[EnlargementWitness]:
    """Seeded search for an ideal that lift-then-intersect strictly enlarges.

    Candidates are all (P, F, q) with D_n <= P <= T_n, n <= max_size, F an
    ideal of P and the next level T_{nq}. The candidate list is shuffled with
    the seed, so different seeds report different witnesses.

    Returns:
        The first witness in shuffled order, or None if no candidate enlarges.

    Raises:
        BoundExceededError: If max_size is above enumeration_max_size.
    """
    if kind not in EmbeddingKind.ALL:
        raise TowerError(f"Unknown embedding kind: {kind!r}")

    candidates: List[Tuple[SupportRelation, IdealSet, int]] = []
    for n in range(1, max_size + 1):
        for relation in sub_relations_of_triangular(n):
            for ideal in enumerate_ideals(relation, max_size=enumeration_max_size):
                for q in multiplicities:
                    candidates.append((relation, ideal, q))

    order = np.random.default_rng(seed).permutation(len(candidates))
    logger.info(
        "Searching %s candidates for a %s enlargement witness (seed=%s)",
        len(candidates),
        kind,
        seed,
    )

    for index in order:
        relation, ideal, q = candidates[int(index)]
        spec = EmbeddingSpec(kind, q)
        next_relation = upper_triangular(relation.n * q)
        recovered = lift_then_intersect(spec, relation, ideal, next_relation)
        if recovered != ideal:
            logger.info(
                "Witness found: P=%s, F=%s, q=%s", relation.pairs, ideal.pairs, q
            )
            return EnlargementWitness(relation, ideal, spec, recovered)

    logger.info("No enlargement witness among %s candidates", len(candidates))
    return None
