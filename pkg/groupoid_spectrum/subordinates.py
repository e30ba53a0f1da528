import logging
from typing import List, Sequence, Tuple

from groupoid_spectrum.errors import DepthMismatchError, OrderingError
from groupoid_spectrum.gsets import Arrow, GSet

logger = logging.getLogger("groupoid_spectrum.subordinates")


def subordinate_check(unit: GSet, ancestor: GSet) -> bool:
    """True iff r(u) phi(v) d(u) = u, phi refining v to the depth of u.

    Raises:
        DepthMismatchError: If u is shallower than v or their alphabets disagree.
    """
    if unit.depth < ancestor.depth:
        raise DepthMismatchError(
            f"Subordinate of depth {unit.depth} cannot sit under depth {ancestor.depth}"
        )
    if unit.alphabet[: ancestor.depth] != ancestor.alphabet:
        raise DepthMismatchError(
            f"Alphabet {unit.alphabet} does not extend {ancestor.alphabet}"
        )

    # the refined ancestor maps a range word p w to s w whenever (p, s) is an arrow
    source_of_prefix = dict(ancestor.pairs)
    sources = unit.source_words()
    cut = ancestor.depth
    compressed = set()
    for word in unit.range_words():
        prefix_source = source_of_prefix.get(word[:cut])
        if prefix_source is None:
            continue
        source = prefix_source + word[cut:]
        if source in sources:
            compressed.add((word, source))
    return compressed == unit.pairs


def listing_key(gset: GSet) -> Tuple[int, List[Arrow]]:
    """Level-major, then row-major by the sorted arrows of the unit."""
    return (gset.depth, gset.sorted_pairs)


def subordinate_deletion(units: Sequence[GSet]) -> List[GSet]:
    """Drops every unit that is subordinate to an earlier unit of the listing.

    Raises:
        OrderingError: If the listing is not level-major, row-major.
    """
    for earlier, later in zip(units, units[1:]):
        if listing_key(later) < listing_key(earlier):
            raise OrderingError(
                "Units must be listed level by level, row-major within a level"
            )

    kept: List[GSet] = []
    for position, unit in enumerate(units):
        if any(subordinate_check(unit, earlier) for earlier in units[:position]):
            continue
        kept.append(unit)

    logger.debug("Subordinate deletion kept %s of %s units", len(kept), len(units))
    return kept
