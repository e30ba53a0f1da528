"""Refinement and standard embeddings acting on matrix-unit indices.

For multiplicity q and level size n:
    refinement  e_ij -> sum over t = 1..q   of e_{(i-1)q+t, (j-1)q+t}
    standard    e_ij -> sum over t = 0..q-1 of e_{i+tn, j+tn}
Refinement amplifies every entry by an identity block; standard places q
block-diagonal copies of the whole matrix.
"""

import logging
from typing import List

import numpy as np

from relation_core.closure import ideal_closure, reflexive_transitive_closure
from relation_core.errors import ContainmentError, IndexRangeError
from relation_core.pairs import (
    IdealSet,
    Pair,
    PairSet,
    ProjectionSet,
    SupportRelation,
    upper_triangular,
)
from tower.models import EmbeddingError, EmbeddingKind, EmbeddingSpec, LevelMismatchError

logger = logging.getLogger("tower.embedding")


def embed_index(spec: EmbeddingSpec, n: int, i: int) -> List[int]:
    """Images of the diagonal index i, one per copy, in copy order."""
    q = spec.multiplicity
    if spec.kind == EmbeddingKind.REFINEMENT:
        return [(i - 1) * q + t for t in range(1, q + 1)]
    return [i + t * n for t in range(q)]


def embed_unit(spec: EmbeddingSpec, n: int, i: int, j: int) -> List[Pair]:
    """The q pairs of the image of e_ij at size n * q, sorted row-major."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexRangeError(f"Matrix unit ({i}, {j}) is outside 1..{n}")
    rows = embed_index(spec, n, i)
    cols = embed_index(spec, n, j)
    return sorted(zip(rows, cols))


def embed_pairs(spec: EmbeddingSpec, pair_set: PairSet) -> PairSet:
    """Union of the images of every pair, at size n * q."""
    n = pair_set.n
    q = spec.multiplicity
    if spec.kind == EmbeddingKind.REFINEMENT:
        bits = np.kron(pair_set.bits, np.eye(q, dtype=bool))
    else:
        bits = np.kron(np.eye(q, dtype=bool), pair_set.bits)
    return PairSet(n * q, bits)


def embed_projection(spec: EmbeddingSpec, projection: ProjectionSet) -> ProjectionSet:
    members = {
        image
        for member in projection.members
        for image in embed_index(spec, projection.n, member)
    }
    return ProjectionSet(projection.n * spec.multiplicity, frozenset(members))


def lift_support(spec: EmbeddingSpec, relation: SupportRelation) -> SupportRelation:
    """Support relation of the image algebra at size n * q.

    Raises:
        EmbeddingError: If relation is T_n and the image leaves T_{nq}.
    """
    image = embed_pairs(spec, relation)
    lifted = reflexive_transitive_closure(image, image.n)

    if relation == upper_triangular(relation.n):
        if not lifted.issubset(upper_triangular(lifted.n)):
            raise EmbeddingError(
                f"{spec.kind} embedding maps T_{relation.n} outside T_{lifted.n}"
            )
    return lifted


def lift_ideal(
    spec: EmbeddingSpec,
    relation: SupportRelation,
    ideal: IdealSet,
    next_relation: SupportRelation,
) -> IdealSet:
    """Ideal of the next level generated by the image of an ideal.

    Raises:
        LevelMismatchError: If the ideal does not belong to relation.
        ContainmentError: If next_relation does not contain the lifted support.
    """
    if ideal.parent != relation:
        raise LevelMismatchError("Ideal does not belong to the given relation")
    lifted = lift_support(spec, relation)
    if lifted.n != next_relation.n or not lifted.issubset(next_relation):
        raise ContainmentError(
            "Next-level relation does not contain the image of the current level"
        )
    return ideal_closure(next_relation, embed_pairs(spec, ideal.support))


def pullback_ideal(
    spec: EmbeddingSpec, relation: SupportRelation, next_ideal: IdealSet
) -> IdealSet:
    """Level-k units of the relation whose whole image lies in the next-level ideal."""
    n = relation.n
    if next_ideal.n != n * spec.multiplicity:
        raise LevelMismatchError(
            f"Ideal of size {next_ideal.n} is not at the level above size {n}"
        )
    kept = [
        (i, j)
        for i, j in relation.pairs
        if all(pair in next_ideal for pair in embed_unit(spec, n, i, j))
    ]
    return IdealSet(relation, PairSet.from_pairs(n, kept))


def lift_then_intersect(
    spec: EmbeddingSpec,
    relation: SupportRelation,
    ideal: IdealSet,
    next_relation: SupportRelation,
) -> IdealSet:
    """Pulls back the lifted ideal: the part of I_{k+1} that lies in A_k."""
    lifted = lift_ideal(spec, relation, ideal, next_relation)
    recovered = pullback_ideal(spec, relation, lifted)
    if recovered != ideal:
        logger.debug(
            "Lift-then-intersect enlarged %s to %s", ideal.pairs, recovered.pairs
        )
    return recovered
