"""Single dyadic generators for ideal sets of a finite-depth order.

Pipeline: list matrix units inside the ideal set, delete subordinates,
refine to full depth, disjointify, weight the pieces by 1/2^i and check the
compression identity r(chi_{E_j}) g d(chi_{E_j}) = chi_{E_j} / 2^j per piece.
Finally the two-sided ideal generated by g is computed as the support of
chi_P * g * chi_P. All coefficients are positive, so nothing cancels.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import FrozenSet, List

from groupoid_spectrum.dyadic import (
    DyadicFunction,
    compress_by,
    convolve,
    disjointify,
    dyadic_generator,
)
from groupoid_spectrum.gsets import Arrow, GSet
from groupoid_spectrum.orders import OrderRelation, ideal_set_check
from groupoid_spectrum.subordinates import subordinate_deletion
from groupoid_spectrum.words import all_words
from relation_core.errors import InvalidIdealError

logger = logging.getLogger("groupoid_spectrum.principal")


class Listing:
    FINEST = "finest"
    LEVEL_MAJOR = "level-major"

    ALL = (FINEST, LEVEL_MAJOR)


@dataclass
class CompressionCheck:
    position: int
    gset: GSet
    holds: bool


@dataclass
class PrincipalGeneratorResult:
    """Everything the generator pipeline produced for one ideal set."""

    ideal_set: FrozenSet[Arrow]
    listing: str
    units: List[GSet]
    kept_units: List[GSet]
    pieces: List[GSet]
    generator: DyadicFunction
    compression_checks: List[CompressionCheck] = field(default_factory=list)
    generated_support: FrozenSet[Arrow] = frozenset()

    @property
    def compression_holds(self) -> bool:
        return all(check.holds for check in self.compression_checks)

    @property
    def generates_ideal(self) -> bool:
        return self.generated_support == self.ideal_set

    @property
    def verified(self) -> bool:
        return self.compression_holds and self.generates_ideal


def basis_listing(
    order: OrderRelation, ideal_set: FrozenSet[Arrow], listing: str
) -> List[GSet]:
    """Matrix units contained in the ideal set, level-major and row-major.

    The finest listing uses the single arrows of the full depth. The
    level-major listing uses every basis set E_{i,j}, |i| = |j| = 1..depth,
    whose refinement to full depth lies in the ideal set.
    """
    alphabet = order.alphabet
    if listing == Listing.FINEST:
        return [GSet(alphabet, frozenset([arrow])) for arrow in sorted(ideal_set)]
    if listing != Listing.LEVEL_MAJOR:
        raise ValueError(f"Unknown listing: {listing}")

    units: List[GSet] = []
    for level in range(1, order.depth + 1):
        level_alphabet = alphabet[:level]
        prefixes = all_words(level_alphabet)
        for prefix_from in prefixes:
            for prefix_to in prefixes:
                unit = GSet.basis(level_alphabet, prefix_from, prefix_to)
                if unit.refine(alphabet).pairs <= ideal_set:
                    units.append(unit)
    return units


def characteristic_of_order(order: OrderRelation) -> DyadicFunction:
    return DyadicFunction.from_pointwise(
        order.alphabet, {arrow: Fraction(1) for arrow in order.pairs}
    )


def generated_ideal_support(
    order: OrderRelation, generator: DyadicFunction
) -> FrozenSet[Arrow]:
    """Support of chi_P * g * chi_P."""
    chi = characteristic_of_order(order)
    return convolve(convolve(chi, generator), chi).support()


def principal_generator(
    order: OrderRelation,
    ideal_set: FrozenSet[Arrow],
    listing: str = Listing.FINEST,
) -> PrincipalGeneratorResult:
    """Builds and checks the dyadic generator of an ideal set.

    Raises:
        InvalidIdealError: If the set is not an ideal set of the order.
        ContainmentError: If the set is not contained in the order.
    """
    ideal_set = frozenset(ideal_set)
    if not ideal_set_check(order, ideal_set):
        raise InvalidIdealError("Set is not closed under P o F o P")

    units = basis_listing(order, ideal_set, listing)
    kept_units = subordinate_deletion(units)
    refined = [unit.refine(order.alphabet) for unit in kept_units]
    pieces = disjointify(refined)
    generator = dyadic_generator(pieces, alphabet=order.alphabet)

    checks = []
    for position, piece in enumerate(pieces, start=1):
        if piece.is_empty():
            continue
        expected = DyadicFunction.characteristic(piece).scale(Fraction(1, 2**position))
        checks.append(
            CompressionCheck(position, piece, compress_by(piece, generator) == expected)
        )

    result = PrincipalGeneratorResult(
        ideal_set=ideal_set,
        listing=listing,
        units=units,
        kept_units=kept_units,
        pieces=pieces,
        generator=generator,
        compression_checks=checks,
        generated_support=generated_ideal_support(order, generator),
    )
    logger.debug(
        "Ideal set of %s arrows: %s units, %s kept, compression=%s, generates=%s",
        len(ideal_set),
        len(units),
        len(kept_units),
        result.compression_holds,
        result.generates_ideal,
    )
    return result
