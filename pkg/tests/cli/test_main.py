import json
import sys

import pytest

from cli import main as cli_main
from config import settings as settings_module

T3 = {"n": 3, "pairs": [[i, j] for i in range(1, 4) for j in range(i, 4)]}
T7 = {"n": 7, "pairs": [[i, j] for i in range(1, 8) for j in range(i, 8)]}
T7_CORNERS = {"n": 7, "pairs": [[1, 1], [2, 2], [6, 6], [7, 7]]}


def _pair_set_payload(ideal):
    return {"n": ideal.n, "pairs": [list(pair) for pair in ideal.pairs]}


@pytest.fixture(autouse=True)
def quiet_environment(monkeypatch):
    monkeypatch.setattr(settings_module, "load_dotenv", lambda: None)
    monkeypatch.setattr(cli_main, "configure_logging", lambda *args, **kwargs: None)
    monkeypatch.setattr(sys, "excepthook", sys.excepthook)
    for name in (
        "SENTRY_DSN",
        "GROUPOIDAL_MAX_SIZE",
        "GROUPOIDAL_MAX_DEPTH",
        "GROUPOIDAL_MAX_PROJECTIONS",
    ):
        monkeypatch.delenv(name, raising=False)


def test_ideals_of_t3(write_json, capsys) -> None:
    path = write_json("t3.json", T3)

    exit_code = cli_main.run(["ideals", path])

    output = capsys.readouterr().out
    assert exit_code == 0
    assert output.startswith("Ideals: 14\n")
    assert "corner generator:   {(2,2)}" in output


def test_ideals_of_t1_as_json(write_json, capsys) -> None:
    path = write_json("t1.json", {"n": 1, "pairs": [[1, 1]]})

    exit_code = cli_main.run(["ideals", path, "--format", "json"])

    payload = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert payload["count"] == 2
    assert payload["ideals"][1]["corners"] == [[1, 1]]


def test_ideals_pretty_prints_star_patterns(write_json, capsys) -> None:
    path = write_json("t2.json", {"n": 2, "pairs": [[1, 1], [1, 2], [2, 2]]})

    cli_main.run(["ideals", path, "--format", "pretty"])

    assert "    0 *\n    0 0" in capsys.readouterr().out


def test_ideals_as_dot(write_json, capsys) -> None:
    path = write_json("t2.json", {"n": 2, "pairs": [[1, 1], [1, 2], [2, 2]]})

    exit_code = cli_main.run(["ideals", path, "--format", "dot"])

    assert exit_code == 0
    assert capsys.readouterr().out.count("digraph") == 5


def test_ideals_can_close_input(write_json, capsys) -> None:
    path = write_json("chain.json", {"n": 3, "pairs": [[1, 2], [2, 3]]})

    assert cli_main.run(["ideals", path]) == 2
    assert cli_main.run(["ideals", path, "--close"]) == 0
    assert "Ideals: 14" in capsys.readouterr().out


def test_malformed_json_exits_with_input_error(tmp_path, capsys) -> None:
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")

    assert cli_main.run(["ideals", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_missing_file_exits_with_input_error(tmp_path) -> None:
    assert cli_main.run(["ideals", str(tmp_path / "missing.json")]) == 2


def test_bound_flag_limits_enumeration(write_json) -> None:
    path = write_json("t3.json", T3)

    assert cli_main.run(["ideals", path, "--bound", "2"]) == 3


def test_environment_bound_limits_enumeration(write_json, monkeypatch) -> None:
    monkeypatch.setenv("GROUPOIDAL_MAX_SIZE", "2")
    path = write_json("t3.json", T3)

    assert cli_main.run(["ideals", path]) == 3


def test_verify_t7_staircase_corners(write_json, capsys, t7_staircase_ideal) -> None:
    relation = write_json("t7.json", T7)
    ideal = write_json("ideal.json", _pair_set_payload(t7_staircase_ideal))
    generator = write_json("corners.json", T7_CORNERS)

    exit_code = cli_main.run(["verify", relation, ideal, generator, "--numeric"])

    output = capsys.readouterr().out
    assert exit_code == 0
    assert output.splitlines()[0] == "PRINCIPAL-VERIFIED"
    assert "numeric oracle agrees: True" in output


def test_verify_reports_unreachable_positions(
    write_json, capsys, t7_staircase_ideal
) -> None:
    relation = write_json("t7.json", T7)
    ideal = write_json("ideal.json", _pair_set_payload(t7_staircase_ideal))
    generator = write_json(
        "partial.json", {"n": 7, "pairs": [[1, 1], [2, 2], [7, 7]]}
    )

    exit_code = cli_main.run(["verify", relation, ideal, generator])

    output = capsys.readouterr().out
    assert exit_code == 1
    assert "NOT-VERIFIED" in output
    assert "unreachable: {(3,6), (4,6), (5,6), (6,6)}" in output


def test_verify_empty_ideal(write_json, capsys) -> None:
    relation = write_json("t3.json", T3)
    empty = write_json("empty.json", {"n": 3, "pairs": []})

    exit_code = cli_main.run(["verify", relation, empty, empty, "--format", "json"])

    payload = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert payload["verified"] is True
    assert payload["missing"] == []


def test_verify_rejects_generator_outside_ideal(write_json, t7_staircase_ideal) -> None:
    relation = write_json("t7.json", T7)
    ideal = write_json("ideal.json", _pair_set_payload(t7_staircase_ideal))
    generator = write_json("outside.json", {"n": 7, "pairs": [[3, 3]]})

    assert cli_main.run(["verify", relation, ideal, generator]) == 2


@pytest.mark.parametrize("kind, expected", [("standard", 2), ("refinement", 3)])
def test_tower_lat_on_two_adic_towers(write_json, capsys, kind, expected) -> None:
    tower = write_json(
        "tower.json", {"base": 2, "levels": [{"kind": kind, "q": 2}] * 4}
    )

    exit_code = cli_main.run(["tower", "lat", tower, "--depth", "5", "--format", "json"])

    payload = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert len(payload["levels"][0]["persistent"]) == expected
    assert len(payload["levels"]) == 5


def test_tower_lat_at_depth_one_is_the_raw_lattice(write_json, capsys) -> None:
    tower = write_json("tower.json", {"base": 3, "levels": []})

    exit_code = cli_main.run(["tower", "lat", tower, "--depth", "1"])

    assert exit_code == 0
    assert capsys.readouterr().out == "level 1: size 3, invariant 4, persistent 4\n"


def test_tower_depth_beyond_bound(write_json) -> None:
    tower = write_json("tower.json", {"base": 2, "levels": [{"kind": "standard", "q": 2}] * 7})

    assert cli_main.run(["tower", "lat", tower, "--depth", "8"]) == 3


def test_projection_bound_limits_tower_lat(write_json, monkeypatch) -> None:
    monkeypatch.setenv("GROUPOIDAL_MAX_PROJECTIONS", "2")
    tower = write_json("tower.json", {"base": 2, "levels": [{"kind": "standard", "q": 2}] * 2})

    assert cli_main.run(["tower", "lat", tower, "--depth", "3"]) == 3


def test_tower_lift(write_json, capsys) -> None:
    tower = write_json(
        "tower.json",
        {"base": 2, "levels": [{"kind": "refinement", "q": 2}, {"kind": "standard", "q": 3}]},
    )

    exit_code = cli_main.run(["tower", "lift", tower, "--format", "json"])

    payload = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert [row["inside_next_level"] for row in payload["levels"]] == [True, True]
    assert [row["next_size"] for row in payload["levels"]] == [4, 12]


def test_tower_inductivity(write_json, capsys) -> None:
    tower = write_json("tower.json", {"base": 2, "levels": [{"kind": "refinement", "q": 2}] * 2})
    ideal = write_json("seed.json", {"n": 2, "pairs": [[1, 2]]})

    exit_code = cli_main.run(
        ["tower", "inductivity", tower, "--ideal", ideal, "--level", "1"]
    )

    assert exit_code == 0
    assert capsys.readouterr().out.splitlines()[-1] == "INDUCTIVE"


def test_tower_inductivity_rejects_seed_of_wrong_size(write_json) -> None:
    tower = write_json("tower.json", {"base": 2, "levels": [{"kind": "refinement", "q": 2}] * 2})
    ideal = write_json("seed.json", {"n": 3, "pairs": []})

    assert cli_main.run(["tower", "inductivity", tower, "--ideal", ideal]) == 2


def test_tower_witness_is_seeded(capsys) -> None:
    assert cli_main.run(["tower", "witness", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert cli_main.run(["tower", "witness", "--format", "json", "--seed", "0"]) == 0
    second = capsys.readouterr().out

    assert first == second
    assert json.loads(first)["added"]


def test_witness_search_respects_bound() -> None:
    assert cli_main.run(["tower", "witness", "--bound", "2"]) == 3
    assert cli_main.run(["tower", "witness", "--bound", "3"]) == 0


def test_spectrum_check_lex_at_depth_three(write_json, capsys) -> None:
    tower = write_json("tower.json", {"base": 2, "levels": [{"kind": "refinement", "q": 2}] * 2})

    exit_code = cli_main.run(["spectrum", "check", tower, "--depth", "3"])

    output = capsys.readouterr().out
    assert exit_code == 0
    assert "total order:   True" in output
    assert "groupoid axiom violations: 0" in output


@pytest.mark.parametrize("order", ["lex", "revlex", "alternation"])
def test_spectrum_check_every_order(write_json, capsys, order) -> None:
    tower = write_json(
        "tower.json",
        {"base": 2, "levels": [{"kind": "refinement", "q": 2}, {"kind": "standard", "q": 2}]},
    )

    exit_code = cli_main.run(
        ["spectrum", "check", tower, "--order", order, "--format", "json"]
    )

    payload = json.loads(capsys.readouterr().out)
    assert exit_code == 0
    assert payload["is_total"] is True


def test_spectrum_emit_depth_one(write_json, capsys) -> None:
    tower = write_json("tower.json", {"base": 2, "levels": []})

    exit_code = cli_main.run(["spectrum", "emit", tower, "--depth", "1"])

    lines = capsys.readouterr().out.splitlines()
    assert exit_code == 0
    assert lines[1:] == ["0.0,0.0,0,0", "0.0,0.5,0,1/2", "0.5,0.5,1/2,1/2"]


def test_spectrum_generator_depth_two(write_json, capsys) -> None:
    tower = write_json("tower.json", {"base": 2, "levels": [{"kind": "refinement", "q": 2}]})
    ideal_set = write_json(
        "ideal_set.json",
        {
            "pairs": [
                [[1, 1], [2, 1]],
                [[1, 1], [2, 2]],
                [[1, 2], [2, 1]],
                [[1, 2], [2, 2]],
            ]
        },
    )

    exit_code = cli_main.run(
        ["spectrum", "generator", tower, "--depth", "2", "--ideal-set", ideal_set]
    )

    output = capsys.readouterr().out
    assert exit_code == 0
    assert "E_1 coefficient 1/2 compression=ok" in output
    assert "E_4 coefficient 1/16 compression=ok" in output
    assert output.splitlines()[-1] == "PRINCIPAL-VERIFIED"


def test_spectrum_generator_rejects_non_ideal_set(write_json) -> None:
    tower = write_json("tower.json", {"base": 2, "levels": [{"kind": "refinement", "q": 2}]})
    ideal_set = write_json("ideal_set.json", {"pairs": [[[1, 1], [1, 1]]]})

    assert (
        cli_main.run(
            ["spectrum", "generator", tower, "--depth", "2", "--ideal-set", ideal_set]
        )
        == 2
    )


def test_out_flag_writes_file(write_json, tmp_path, capsys) -> None:
    path = write_json("t3.json", T3)
    target = tmp_path / "ideals.json"

    exit_code = cli_main.run(["ideals", path, "--format", "json", "--out", str(target)])

    assert exit_code == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["count"] == 14


def test_identical_inputs_give_identical_output(write_json, capsys) -> None:
    path = write_json("t3.json", T3)

    cli_main.run(["ideals", path, "--format", "json"])
    first = capsys.readouterr().out
    cli_main.run(["ideals", path, "--format", "json"])
    second = capsys.readouterr().out

    assert first == second


def test_unexpected_errors_are_reported(write_json, monkeypatch) -> None:
    captured = []

    def broken_handler(args, settings, stream):
        raise RuntimeError("boom")

    monkeypatch.setitem(cli_main.HANDLERS, "ideals", broken_handler)
    monkeypatch.setattr(cli_main.sentry_sdk, "capture_exception", captured.append)
    path = write_json("t3.json", T3)

    assert cli_main.run(["ideals", path]) == 4
    assert len(captured) == 1
    assert str(captured[0]) == "boom"


def test_main_exits_with_run_code(monkeypatch) -> None:
    monkeypatch.setattr(cli_main, "run", lambda argv=None: 3)

    with pytest.raises(SystemExit) as error:
        cli_main.main()

    assert error.value.code == 3
