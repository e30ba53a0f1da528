import json
from typing import Any, Iterable, TextIO

from digraph_matrix.generation import indicator_matrix
from groupoid_spectrum.gsets import Arrow
from relation_core.pairs import Pair, PairSet


class OutputFormat:
    JSON = "json"
    DOT = "dot"
    CSV = "csv"
    PRETTY = "pretty"

    ALL = (JSON, DOT, CSV, PRETTY)


def write_json(payload: Any, stream: TextIO) -> None:
    json.dump(payload, stream, indent=2)
    stream.write("\n")


def format_pairs(pairs: Iterable[Pair]) -> str:
    return "{" + ", ".join(f"({i},{j})" for i, j in pairs) + "}"


def format_word(word: Iterable[int]) -> str:
    return "(" + ",".join(str(letter) for letter in word) + ")"


def format_arrow(arrow: Arrow) -> str:
    u, v = arrow
    return f"{format_word(u)}->{format_word(v)}"


def star_pattern(pair_set: PairSet) -> str:
    """Matrix figure with '*' on the pairs and '0' elsewhere."""
    return indicator_matrix(pair_set).to_star_pattern()


def arrows_payload(arrows: Iterable[Arrow]) -> list:
    return [[list(u), list(v)] for u, v in sorted(arrows)]
