"""Finite dyadic combinations of G-set characteristic functions.

A DyadicFunction is sum of c_i chi_{E_i} over pairwise disjoint G-sets E_i
with nonzero dyadic coefficients c_i. Convolution and involution follow the
groupoid algebra of the truncated tail groupoid.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from groupoid_spectrum.errors import (
    CoefficientError,
    DepthMismatchError,
    OverlapError,
)
from groupoid_spectrum.gsets import Arrow, GSet
from groupoid_spectrum.words import Alphabet, check_alphabet
from relation_core.errors import PayloadFormatError

Term = Tuple[GSet, Fraction]


def is_dyadic(value: Fraction) -> bool:
    denominator = value.denominator
    return denominator & (denominator - 1) == 0


@dataclass(frozen=True, eq=False)
class DyadicFunction:
    alphabet: Alphabet
    terms: Tuple[Term, ...]

    def __post_init__(self) -> None:
        alphabet = check_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        terms = tuple((gset, Fraction(coefficient)) for gset, coefficient in self.terms)
        object.__setattr__(self, "terms", terms)

        covered: set = set()
        for gset, coefficient in terms:
            if gset.alphabet != alphabet:
                raise DepthMismatchError(
                    f"Term over {gset.alphabet} in a function over {alphabet}"
                )
            if coefficient == 0:
                raise CoefficientError("Coefficients must be nonzero")
            if not is_dyadic(coefficient):
                raise CoefficientError(f"Coefficient {coefficient} is not dyadic")
            if gset.is_empty():
                raise OverlapError("Terms must have nonempty G-sets")
            if not covered.isdisjoint(gset.pairs):
                raise OverlapError("Terms of a dyadic function must be disjoint")
            covered |= gset.pairs

    @classmethod
    def zero(cls, alphabet: Iterable[int]) -> "DyadicFunction":
        return cls(tuple(alphabet), ())

    @classmethod
    def characteristic(cls, gset: GSet) -> "DyadicFunction":
        """chi_E; the zero function for an empty G-set."""
        if gset.is_empty():
            return cls.zero(gset.alphabet)
        return cls(gset.alphabet, ((gset, Fraction(1)),))

    @classmethod
    def from_pointwise(
        cls, alphabet: Iterable[int], values: Dict[Arrow, Fraction]
    ) -> "DyadicFunction":
        """Rebuilds a function from its values, grouping arrows into G-sets.

        Arrows sharing a coefficient are packed greedily, in sorted order, into
        the first G-set where neither their range nor their source is taken.
        """
        alphabet = check_alphabet(alphabet)
        by_coefficient: Dict[Fraction, List[Arrow]] = defaultdict(list)
        for arrow, value in values.items():
            if value != 0:
                by_coefficient[Fraction(value)].append(arrow)

        terms: List[Term] = []
        for coefficient in sorted(by_coefficient, reverse=True):
            groups: List[Tuple[set, set, set]] = []
            for u, v in sorted(by_coefficient[coefficient]):
                for ranges, sources, arrows in groups:
                    if u not in ranges and v not in sources:
                        ranges.add(u)
                        sources.add(v)
                        arrows.add((u, v))
                        break
                else:
                    groups.append(({u}, {v}, {(u, v)}))
            for _, _, arrows in groups:
                terms.append((GSet(alphabet, frozenset(arrows)), coefficient))
        return cls(alphabet, tuple(terms))

    @property
    def depth(self) -> int:
        return len(self.alphabet)

    def pointwise(self) -> Dict[Arrow, Fraction]:
        return {
            arrow: coefficient
            for gset, coefficient in self.terms
            for arrow in gset.pairs
        }

    def support(self) -> FrozenSet[Arrow]:
        return frozenset(self.pointwise())

    def scale(self, factor: Fraction) -> "DyadicFunction":
        if factor == 0:
            return DyadicFunction.zero(self.alphabet)
        return DyadicFunction(
            self.alphabet,
            tuple((gset, coefficient * factor) for gset, coefficient in self.terms),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DyadicFunction):
            return NotImplemented
        return self.alphabet == other.alphabet and self.pointwise() == other.pointwise()

    def __repr__(self) -> str:
        parts = ", ".join(
            f"{coefficient}*chi{gset.sorted_pairs}" for gset, coefficient in self.terms
        )
        return f"DyadicFunction({parts or '0'})"

    def to_payload(self) -> Dict[str, Any]:
        return {
            "alphabet": list(self.alphabet),
            "terms": [
                {
                    "gset": gset.to_payload(),
                    "num": coefficient.numerator,
                    "log2_den": coefficient.denominator.bit_length() - 1,
                }
                for gset, coefficient in self.terms
            ],
        }

    @classmethod
    def from_payload(cls, payload: Any) -> "DyadicFunction":
        if not isinstance(payload, dict) or not isinstance(payload.get("terms"), list):
            raise PayloadFormatError("Dyadic function payload needs a 'terms' list")
        alphabet = payload.get("alphabet")
        terms: List[Term] = []
        for item in payload["terms"]:
            if not isinstance(item, dict):
                raise PayloadFormatError(f"Malformed term {item!r}")
            num = item.get("num")
            log2_den = item.get("log2_den")
            if not isinstance(num, int) or not isinstance(log2_den, int) or log2_den < 0:
                raise PayloadFormatError(f"Malformed coefficient in {item!r}")
            gset = GSet.from_payload(item.get("gset"))
            terms.append((gset, Fraction(num, 2**log2_den)))
        if alphabet is None:
            if not terms:
                raise PayloadFormatError("A zero function payload needs 'alphabet'")
            alphabet = list(terms[0][0].alphabet)
        if not isinstance(alphabet, list):
            raise PayloadFormatError("'alphabet' must be a list of integers")
        return cls(tuple(alphabet), tuple(terms))


def convolve(left: DyadicFunction, right: DyadicFunction) -> DyadicFunction:
    """(f * h)(a, b) = sum over c of f(a, c) h(c, b)."""
    if left.alphabet != right.alphabet:
        raise DepthMismatchError("Cannot convolve functions of different depths")

    right_by_range: Dict[Any, List[Tuple[Any, Fraction]]] = defaultdict(list)
    for (c, b), value in right.pointwise().items():
        right_by_range[c].append((b, value))

    values: Dict[Arrow, Fraction] = defaultdict(Fraction)
    for (a, c), left_value in left.pointwise().items():
        for b, right_value in right_by_range.get(c, []):
            values[(a, b)] += left_value * right_value
    return DyadicFunction.from_pointwise(left.alphabet, values)


def involute(function: DyadicFunction) -> DyadicFunction:
    """f*(a, b) = conj f(b, a); coefficients are real."""
    return DyadicFunction(
        function.alphabet,
        tuple((gset.inverse(), coefficient) for gset, coefficient in function.terms),
    )


def disjointify(family: Sequence[GSet]) -> List[GSet]:
    """E_i = K_i minus the union of K_1..K_{i-1}; empty E_i keep their slot."""
    if not family:
        return []
    alphabet = family[0].alphabet
    covered: set = set()
    result: List[GSet] = []
    for gset in family:
        if gset.alphabet != alphabet:
            raise DepthMismatchError("All G-sets of a family must share one depth")
        result.append(GSet(alphabet, gset.pairs - covered))
        covered |= gset.pairs
    return result


def dyadic_generator(
    family: Sequence[GSet], alphabet: Optional[Alphabet] = None
) -> DyadicFunction:
    """g = sum of chi_{E_i} / 2^i over the nonempty members, i from 1.

    Args:
        family: Pairwise disjoint G-sets of one depth.
        alphabet: Depth of the result; required when the family is empty.

    Raises:
        OverlapError: If two members share an arrow.
    """
    if alphabet is None:
        if not family:
            raise DepthMismatchError("An empty family needs an explicit alphabet")
        alphabet = family[0].alphabet
    covered: set = set()
    terms: List[Term] = []
    for position, gset in enumerate(family, start=1):
        if gset.alphabet != alphabet:
            raise DepthMismatchError("All G-sets of a family must share one depth")
        if not covered.isdisjoint(gset.pairs):
            raise OverlapError(f"Member {position} overlaps an earlier member")
        covered |= gset.pairs
        if not gset.is_empty():
            terms.append((gset, Fraction(1, 2**position)))
    return DyadicFunction(alphabet, tuple(terms))


def compress_by(gset: GSet, function: DyadicFunction) -> DyadicFunction:
    """r(chi_E) g d(chi_E): keeps arrows with range in r(E) and source in d(E)."""
    if gset.alphabet != function.alphabet:
        raise DepthMismatchError("Cannot compress by a G-set of another depth")
    ranges = gset.range_words()
    sources = gset.source_words()
    terms: List[Term] = []
    for term_gset, coefficient in function.terms:
        kept = frozenset(
            (u, v) for u, v in term_gset.pairs if u in ranges and v in sources
        )
        if kept:
            terms.append((GSet(function.alphabet, kept), coefficient))
    return DyadicFunction(function.alphabet, tuple(terms))
