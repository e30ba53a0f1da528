import io
import json

from cli.rendering import (
    arrows_payload,
    format_arrow,
    format_pairs,
    star_pattern,
    write_json,
)
from relation_core.pairs import PairSet


def test_format_pairs() -> None:
    assert format_pairs([(1, 2), (3, 3)]) == "{(1,2), (3,3)}"
    assert format_pairs([]) == "{}"


def test_format_arrow() -> None:
    assert format_arrow(((1, 2), (2, 1))) == "(1,2)->(2,1)"


def test_star_pattern_marks_pairs() -> None:
    pattern = star_pattern(PairSet.from_pairs(3, [(1, 1), (1, 3), (2, 3)]))

    assert pattern == "* 0 *\n0 0 *\n0 0 0"


def test_arrows_payload_is_sorted() -> None:
    arrows = {((2,), (2,)), ((1,), (2,))}

    assert arrows_payload(arrows) == [[[1], [2]], [[2], [2]]]


def test_write_json_ends_with_newline() -> None:
    stream = io.StringIO()

    write_json({"count": 2}, stream)

    assert stream.getvalue().endswith("}\n")
    assert json.loads(stream.getvalue()) == {"count": 2}
