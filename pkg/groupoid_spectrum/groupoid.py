"""The tail-equivalence groupoid truncated at a finite depth.

At depth k every two words of length k are tail equivalent, so the groupoid
is the full relation on depth-k words with product ((x, y), (y, z)) -> (x, z).
The tail structure is carried by the basis G-sets E_{i,j}.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional

from config.settings import DEFAULT_GROUPOID_MAX_WORDS
from groupoid_spectrum.errors import DepthMismatchError
from groupoid_spectrum.gsets import Arrow, GSet
from groupoid_spectrum.words import Alphabet, Word, all_words, check_alphabet

logger = logging.getLogger("groupoid_spectrum.groupoid")


def groupoid_compose(left: Arrow, right: Arrow) -> Optional[Arrow]:
    """(u, v)(v, w) = (u, w); None when the middle words differ."""
    u, v = left
    v_other, w = right
    if v != v_other:
        return None
    return (u, w)


def inverse(arrow: Arrow) -> Arrow:
    u, v = arrow
    return (v, u)


def range_of(arrow: Arrow) -> Arrow:
    u, _ = arrow
    return (u, u)


def source_of(arrow: Arrow) -> Arrow:
    _, v = arrow
    return (v, v)


@dataclass
class TailGroupoid:
    alphabet: Alphabet
    words: List[Word] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.alphabet)

    def arrows(self) -> Iterator[Arrow]:
        for u in self.words:
            for v in self.words:
                yield (u, v)

    def arrow_count(self) -> int:
        return len(self.words) ** 2

    def unit_space(self) -> GSet:
        return GSet(self.alphabet, frozenset((w, w) for w in self.words))

    def basis_gset(self, prefix_from: Word, prefix_to: Word) -> GSet:
        """E_{i,j} at the full depth of the groupoid."""
        return GSet.basis(self.alphabet, tuple(prefix_from), tuple(prefix_to))

    def basis_gsets(self, prefix_length: int) -> List[GSet]:
        """All E_{i,j} with |i| = |j| = prefix_length, row-major in (i, j)."""
        if not 1 <= prefix_length <= self.depth:
            raise DepthMismatchError(
                f"Prefix length {prefix_length} is outside 1..{self.depth}"
            )
        prefixes = all_words(self.alphabet[:prefix_length])
        return [
            self.basis_gset(prefix_from, prefix_to)
            for prefix_from in prefixes
            for prefix_to in prefixes
        ]

    def refine(self, gset: GSet) -> GSet:
        """Image of a shallower G-set at the depth of this groupoid."""
        return gset.refine(self.alphabet)

    def axiom_violations(self) -> List[str]:
        """Checks associativity, inverse laws and unit laws on every arrow.

        Returns:
            Human-readable descriptions of violations; empty when all hold.
        """
        violations: List[str] = []
        arrows = list(self.arrows())
        by_source = {}
        for arrow in arrows:
            by_source.setdefault(arrow[0], []).append(arrow)

        for a in arrows:
            a_inverse = inverse(a)
            if groupoid_compose(a, a_inverse) != range_of(a):
                violations.append(f"a a^-1 != r(a) for {a}")
            if groupoid_compose(a_inverse, a) != source_of(a):
                violations.append(f"a^-1 a != d(a) for {a}")
            if groupoid_compose(range_of(a), a) != a:
                violations.append(f"r(a) a != a for {a}")

            for b in by_source.get(a[1], []):
                ab = groupoid_compose(a, b)
                if ab is None:
                    violations.append(f"{a} and {b} should compose")
                    continue
                if groupoid_compose(a_inverse, ab) != b:
                    violations.append(f"a^-1 (a b) != b for {a}, {b}")
                if groupoid_compose(ab, inverse(b)) != a:
                    violations.append(f"(a b) b^-1 != a for {a}, {b}")
                for c in by_source.get(b[1], []):
                    left = groupoid_compose(ab, c)
                    bc = groupoid_compose(b, c)
                    right = groupoid_compose(a, bc) if bc is not None else None
                    if left != right:
                        violations.append(f"(a b) c != a (b c) for {a}, {b}, {c}")

        logger.debug(
            "Checked groupoid axioms on %s arrows, %s violations",
            len(arrows),
            len(violations),
        )
        return violations


def tail_groupoid(
    alphabet: Alphabet, max_words: int = DEFAULT_GROUPOID_MAX_WORDS
) -> TailGroupoid:
    alphabet = check_alphabet(alphabet)
    return TailGroupoid(alphabet=alphabet, words=all_words(alphabet, max_words))
