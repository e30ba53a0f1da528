"""JSON payloads for pair-sets, support relations, ideals and projections.

Schemas:
    pair-set / relation: {"n": int, "pairs": [[i, j], ...]}
    ideal:               {"parent": <relation>, "pairs": [[i, j], ...]}
    projection:          {"n": int, "members": [i, ...]}
"""

from typing import Any, Dict, List

from config.settings import DEFAULT_RELATION_MAX_SIZE
from relation_core.closure import reflexive_transitive_closure
from relation_core.errors import BoundExceededError, PayloadFormatError
from relation_core.pairs import (
    IdealSet,
    Pair,
    PairSet,
    ProjectionSet,
    SupportRelation,
)


def pair_set_to_payload(pair_set: PairSet) -> Dict[str, Any]:
    return {"n": pair_set.n, "pairs": [[i, j] for i, j in pair_set.pairs]}


def relation_to_payload(relation: SupportRelation) -> Dict[str, Any]:
    return pair_set_to_payload(relation)


def ideal_to_payload(ideal: IdealSet) -> Dict[str, Any]:
    return {
        "parent": relation_to_payload(ideal.parent),
        "pairs": [[i, j] for i, j in ideal.pairs],
    }


def projection_to_payload(projection: ProjectionSet) -> Dict[str, Any]:
    return {"n": projection.n, "members": projection.sorted_members}


def pair_set_from_payload(
    payload: Any, max_size: int = DEFAULT_RELATION_MAX_SIZE
) -> PairSet:
    n = _read_size(payload, max_size)
    return PairSet.from_pairs(n, _read_pairs(payload))


def relation_from_payload(
    payload: Any,
    max_size: int = DEFAULT_RELATION_MAX_SIZE,
    close: bool = False,
) -> SupportRelation:
    """Parses a support relation.

    Args:
        payload: Decoded JSON value.
        max_size: Largest n accepted.
        close: Replace the pairs by their reflexive-transitive closure instead
            of rejecting input that is not already a support relation.

    Raises:
        PayloadFormatError: If the payload does not follow the schema.
        InvalidRelationError: If close is False and the pairs are not
            reflexive and transitive.
    """
    n = _read_size(payload, max_size)
    pairs = _read_pairs(payload)
    if close:
        return reflexive_transitive_closure(pairs, n)
    return SupportRelation.from_pairs(n, pairs)


def ideal_from_payload(
    payload: Any, max_size: int = DEFAULT_RELATION_MAX_SIZE
) -> IdealSet:
    if not isinstance(payload, dict) or "parent" not in payload:
        raise PayloadFormatError("Ideal payload must be an object with 'parent'")
    parent = relation_from_payload(payload["parent"], max_size=max_size)
    support = PairSet.from_pairs(parent.n, _read_pairs(payload))
    return IdealSet(parent, support)


def projection_from_payload(
    payload: Any, max_size: int = DEFAULT_RELATION_MAX_SIZE
) -> ProjectionSet:
    n = _read_size(payload, max_size)
    members = payload.get("members")
    if not isinstance(members, list) or not all(_is_int(m) for m in members):
        raise PayloadFormatError("'members' must be a list of integers")
    return ProjectionSet(n, frozenset(members))


def _read_size(payload: Any, max_size: int) -> int:
    if not isinstance(payload, dict):
        raise PayloadFormatError("Payload must be a JSON object")
    n = payload.get("n")
    if not _is_int(n) or n < 1:
        raise PayloadFormatError(f"'n' must be a positive integer, got {n!r}")
    if n > max_size:
        raise BoundExceededError(f"Relation size {n} exceeds the bound {max_size}")
    return int(n)


def _read_pairs(payload: Dict[str, Any]) -> List[Pair]:
    raw = payload.get("pairs")
    if not isinstance(raw, list):
        raise PayloadFormatError("'pairs' must be a list of [i, j] lists")

    pairs: List[Pair] = []
    for item in raw:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(_is_int(x) for x in item)
        ):
            raise PayloadFormatError(f"Malformed pair {item!r}")
        pairs.append((item[0], item[1]))
    return pairs


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)
