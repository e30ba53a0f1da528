import itertools
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Tuple

from groupoid_spectrum.errors import DepthMismatchError, GSetError
from groupoid_spectrum.words import Alphabet, Word, check_alphabet, check_word
from relation_core.errors import PayloadFormatError

Arrow = Tuple[Word, Word]


@dataclass(frozen=True)
class GSet:
    """A set of arrows (u, v) of one depth on which range and source are injective.

    It is the graph of a partial bijection v -> u between words, the finite
    picture of the partial homeomorphism induced by a partial isometry.
    """

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

        ranges = [u for u, _ in pairs]
        sources = [v for _, v in pairs]
        if len(set(ranges)) != len(ranges):
            raise GSetError("Two arrows of the set share a range word")
        if len(set(sources)) != len(sources):
            raise GSetError("Two arrows of the set share a source word")

    @classmethod
    def empty(cls, alphabet: Iterable[int]) -> "GSet":
        return cls(tuple(alphabet), frozenset())

    @classmethod
    def basis(
        cls, alphabet: Iterable[int], prefix_from: Word, prefix_to: Word
    ) -> "GSet":
        """E_{i,j} = {(i w, j w)} over every tail w completing the prefixes."""
        alphabet = check_alphabet(alphabet)
        if len(prefix_from) != len(prefix_to) or len(prefix_from) > len(alphabet):
            raise DepthMismatchError(
                f"Prefixes {prefix_from} and {prefix_to} do not fit alphabet {alphabet}"
            )
        tail_sizes = alphabet[len(prefix_from):]
        tails = itertools.product(*(range(1, r + 1) for r in tail_sizes))
        return cls(
            alphabet,
            frozenset(
                (tuple(prefix_from) + tail, tuple(prefix_to) + tail) for tail in tails
            ),
        )

    @property
    def depth(self) -> int:
        return len(self.alphabet)

    @property
    def sorted_pairs(self) -> List[Arrow]:
        return sorted(self.pairs)

    def is_empty(self) -> bool:
        return not self.pairs

    def range_words(self) -> FrozenSet[Word]:
        return frozenset(u for u, _ in self.pairs)

    def source_words(self) -> FrozenSet[Word]:
        return frozenset(v for _, v in self.pairs)

    def range_units(self) -> "GSet":
        """r(E) as a subset of the unit space."""
        return GSet(self.alphabet, frozenset((u, u) for u, _ in self.pairs))

    def source_units(self) -> "GSet":
        return GSet(self.alphabet, frozenset((v, v) for _, v in self.pairs))

    def inverse(self) -> "GSet":
        return GSet(self.alphabet, frozenset((v, u) for u, v in self.pairs))

    def product(self, other: "GSet") -> "GSet":
        """EF = {(x, z) : (x, y) in E and (y, z) in F}."""
        self._require_same_depth(other)
        by_range = {y: z for y, z in other.pairs}
        return GSet(
            self.alphabet,
            frozenset((x, by_range[y]) for x, y in self.pairs if y in by_range),
        )

    def difference(self, other: "GSet") -> "GSet":
        self._require_same_depth(other)
        return GSet(self.alphabet, self.pairs - other.pairs)

    def intersection(self, other: "GSet") -> "GSet":
        self._require_same_depth(other)
        return GSet(self.alphabet, self.pairs & other.pairs)

    def is_disjoint(self, other: "GSet") -> bool:
        self._require_same_depth(other)
        return self.pairs.isdisjoint(other.pairs)

    def refine(self, alphabet: Iterable[int]) -> "GSet":
        """Image at a deeper truncation: every arrow (u, v) becomes (u w, v w)."""
        alphabet = check_alphabet(alphabet)
        if alphabet[: self.depth] != self.alphabet:
            raise DepthMismatchError(
                f"Alphabet {alphabet} does not extend {self.alphabet}"
            )
        tail_sizes = alphabet[self.depth:]
        tails = list(itertools.product(*(range(1, r + 1) for r in tail_sizes)))
        return GSet(
            alphabet,
            frozenset((u + tail, v + tail) for u, v in self.pairs for tail in tails),
        )

    def _require_same_depth(self, other: "GSet") -> None:
        if self.alphabet != other.alphabet:
            raise DepthMismatchError(
                f"G-sets over {self.alphabet} and {other.alphabet} cannot be combined"
            )

    def to_payload(self) -> Dict[str, Any]:
        return {
            "depth": self.depth,
            "alphabet": list(self.alphabet),
            "pairs": [[list(u), list(v)] for u, v in self.sorted_pairs],
        }

    @classmethod
    def from_payload(cls, payload: Any) -> "GSet":
        if not isinstance(payload, dict):
            raise PayloadFormatError("G-set payload must be a JSON object")
        alphabet = payload.get("alphabet")
        raw_pairs = payload.get("pairs")
        if not isinstance(alphabet, list) or not all(
            isinstance(size, int) for size in alphabet
        ):
            raise PayloadFormatError("'alphabet' must be a list of integers")
        if payload.get("depth", len(alphabet)) != len(alphabet):
            raise PayloadFormatError("'depth' does not match the alphabet length")
        return cls(tuple(alphabet), frozenset(read_arrows(raw_pairs)))


def read_arrows(raw_pairs: Any) -> List[Arrow]:
    if not isinstance(raw_pairs, list):
        raise PayloadFormatError("'pairs' must be a list of [u, v] word pairs")
    arrows: List[Arrow] = []
    for item in raw_pairs:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(
                isinstance(word, list) and all(isinstance(x, int) for x in word)
                for word in item
            )
        ):
            raise PayloadFormatError(f"Malformed arrow {item!r}")
        arrows.append((tuple(item[0]), tuple(item[1])))
    return arrows
