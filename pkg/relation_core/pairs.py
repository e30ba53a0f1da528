"""Value types for the combinatorial skeleton of digraph algebras.

Pair-sets are dense n x n boolean matrices held in read-only numpy arrays.
Indices exposed to callers are 1-based, matching matrix-unit notation e_ij;
the arrays themselves are 0-based.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Tuple

import numpy as np

from relation_core.errors import (
    IndexRangeError,
    InvalidIdealError,
    InvalidRelationError,
    SizeMismatchError,
)

Pair = Tuple[int, int]


def boolean_product(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Relational composition of two boolean matrices of equal shape."""
    return (left.astype(np.int64) @ right.astype(np.int64)) > 0


@dataclass(frozen=True, eq=False)
class PairSet:
    """A set of index pairs (i, j) with 1 <= i, j <= n."""

    n: int
    bits: np.ndarray

    def __post_init__(self) -> None:
        if self.n < 1:
            raise IndexRangeError(f"Matrix size must be positive, got {self.n}")

        bits = np.array(self.bits, dtype=bool, copy=True)
        if bits.shape != (self.n, self.n):
            raise SizeMismatchError(
                f"Bit matrix shape {bits.shape} does not match size {self.n}"
            )
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> "PairSet":
        return PairSet(n, _bits_from_pairs(n, pairs))

    @classmethod
    def empty(cls, n: int) -> "PairSet":
        return PairSet(n, np.zeros((n, n), dtype=bool))

    @property
    def pairs(self) -> List[Pair]:
        """Pairs in row-major order, 1-based."""
        return [(int(i) + 1, int(j) + 1) for i, j in np.argwhere(self.bits)]

    def to_pair_set(self) -> "PairSet":
        return PairSet(self.n, self.bits)

    def is_empty(self) -> bool:
        return not bool(self.bits.any())

    def union(self, other: "PairSet") -> "PairSet":
        self._require_same_size(other)
        return PairSet(self.n, self.bits | other.bits)

    def intersection(self, other: "PairSet") -> "PairSet":
        self._require_same_size(other)
        return PairSet(self.n, self.bits & other.bits)

    def difference(self, other: "PairSet") -> "PairSet":
        self._require_same_size(other)
        return PairSet(self.n, self.bits & ~other.bits)

    def issubset(self, other: "PairSet") -> bool:
        self._require_same_size(other)
        return not bool((self.bits & ~other.bits).any())

    def transpose(self) -> "PairSet":
        return PairSet(self.n, self.bits.T)

    def _require_same_size(self, other: "PairSet") -> None:
        if self.n != other.n:
            raise SizeMismatchError(
                f"Pair-sets live on different index sets: {self.n} != {other.n}"
            )

    def __contains__(self, pair: object) -> bool:
        if not isinstance(pair, tuple) or len(pair) != 2:
            return False
        i, j = pair
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            return False
        return bool(self.bits[i - 1, j - 1])

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.pairs)

    def __len__(self) -> int:
        return int(self.bits.sum())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PairSet):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.bits, other.bits))

    def __hash__(self) -> int:
        return hash((self.n, self.bits.tobytes()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, pairs={self.pairs})"


class SupportRelation(PairSet):
    """A reflexive, transitive pair-set: the support set P of a digraph algebra."""

    def __post_init__(self) -> None:
        super().__post_init__()

        if not bool(np.diagonal(self.bits).all()):
            missing = [i + 1 for i in range(self.n) if not self.bits[i, i]]
            raise InvalidRelationError(f"Relation is not reflexive at {missing}")

        composed = boolean_product(self.bits, self.bits)
        violations = np.argwhere(composed & ~self.bits)
        if len(violations) > 0:
            i, k = violations[0]
            raise InvalidRelationError(
                f"Relation is not transitive: ({i + 1}, {k + 1}) is forced "
                "by composition but missing"
            )

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[Pair]) -> "SupportRelation":
        return SupportRelation(n, _bits_from_pairs(n, pairs))

    def is_antisymmetric(self) -> bool:
        return not bool((self.bits & self.bits.T & ~np.eye(self.n, dtype=bool)).any())


@dataclass(frozen=True, eq=False)
class IdealSet:
    """A subset F of a support relation P with P o F o P contained in F."""

    parent: SupportRelation
    support: PairSet

    def __post_init__(self) -> None:
        support = self.support.to_pair_set()
        object.__setattr__(self, "support", support)

        if support.n != self.parent.n:
            raise SizeMismatchError(
                f"Ideal size {support.n} does not match relation size {self.parent.n}"
            )

        outside = support.difference(self.parent)
        if not outside.is_empty():
            raise InvalidIdealError(
                f"Ideal pairs {outside.pairs} are not in the support relation"
            )

        left = boolean_product(self.parent.bits, support.bits) & ~support.bits
        if left.any():
            i, k = np.argwhere(left)[0]
            raise InvalidIdealError(
                f"Ideal is not closed under left absorption at ({i + 1}, {k + 1})"
            )

        right = boolean_product(support.bits, self.parent.bits) & ~support.bits
        if right.any():
            i, k = np.argwhere(right)[0]
            raise InvalidIdealError(
                f"Ideal is not closed under right absorption at ({i + 1}, {k + 1})"
            )

    @property
    def n(self) -> int:
        return self.parent.n

    @property
    def pairs(self) -> List[Pair]:
        return self.support.pairs

    def is_empty(self) -> bool:
        return self.support.is_empty()

    def __contains__(self, pair: object) -> bool:
        return pair in self.support

    def __iter__(self) -> Iterator[Pair]:
        return iter(self.support)

    def __len__(self) -> int:
        return len(self.support)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdealSet):
            return NotImplemented
        return self.parent == other.parent and self.support == other.support

    def __hash__(self) -> int:
        return hash((self.parent, self.support))

    def __repr__(self) -> str:
        return f"IdealSet(n={self.n}, pairs={self.pairs})"


@dataclass(frozen=True)
class ProjectionSet:
    """Diagonal support of the projection p = sum of e_ii over members."""

    n: int
    members: FrozenSet[int]

    def __post_init__(self) -> None:
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        out_of_range = sorted(m for m in members if not 1 <= m <= self.n)
        if out_of_range:
            raise IndexRangeError(
                f"Projection members {out_of_range} are outside 1..{self.n}"
            )

    @property
    def sorted_members(self) -> List[int]:
        return sorted(self.members)

    def union(self, other: "ProjectionSet") -> "ProjectionSet":
        return ProjectionSet(self.n, self.members | other.members)

    def intersection(self, other: "ProjectionSet") -> "ProjectionSet":
        return ProjectionSet(self.n, self.members & other.members)

    def __len__(self) -> int:
        return len(self.members)


def upper_triangular(n: int) -> SupportRelation:
    """Support of T_n, the upper triangular matrices."""
    return SupportRelation(n, np.triu(np.ones((n, n), dtype=bool)))


def identity_relation(n: int) -> SupportRelation:
    """Support of D_n, the diagonal matrices."""
    return SupportRelation(n, np.eye(n, dtype=bool))


def full_relation(n: int) -> SupportRelation:
    """Support of M_n."""
    return SupportRelation(n, np.ones((n, n), dtype=bool))


def _bits_from_pairs(n: int, pairs: Iterable[Pair]) -> np.ndarray:
    if n < 1:
        raise IndexRangeError(f"Matrix size must be positive, got {n}")

    bits = np.zeros((n, n), dtype=bool)
    for i, j in pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexRangeError(f"Pair ({i}, {j}) is outside 1..{n}")
        bits[i - 1, j - 1] = True
    return bits
