"""
End-to-end tests of the lgtk command group through run().
"""

import json

import pytest

from cli import EXIT_INPUT, EXIT_NUMERIC, EXIT_OK, run
from config.settings import settings
from db import GoldenRepository


@pytest.fixture
def golden_db(tmp_path, monkeypatch):
    path = tmp_path / "goldens.db"
    monkeypatch.setattr(settings, "GOLDEN_DB_PATH", str(path))
    return path


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_an_tree_dot(capsys):
    assert run(["an", "tree", "--n", "7", "--J", "2,4"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("graph vanishing_tree {")
    assert '  1 -- 2 [label="1", stage=1];' in out
    assert '  1 -- 8 [label="7", stage=3];' in out


def test_an_tree_blocks_layout(capsys):
    assert run(["an", "tree", "--n", "7", "--J", "2,4", "--layout", "blocks"]) == EXIT_OK
    assert '  3 -- 8 [label="7", stage=3];' in capsys.readouterr().out


def test_an_tree_json(capsys):
    assert run(["an", "tree", "--n", "7", "--J", "2,4", "--format", "json"]) == EXIT_OK
    payload = _json(capsys)
    assert payload["stage_counts"] == [1, 2, 4]
    assert payload["circuits"] == [[0, 1, 2], [0, 2, 4], [0, 4, 8]]
    assert payload["degeneration"]["J"] == [0, 1, 2, 4, 8]
    assert len(payload["insertions"]) == 3


def test_json_output_is_deterministic(capsys):
    run(["an", "perversity", "--n", "3", "--J", "2"])
    first = capsys.readouterr().out
    run(["an", "perversity", "--n", "3", "--J", "2"])
    assert capsys.readouterr().out == first
    payload = json.loads(first)
    assert payload["perversity"] == [1, 1, 1]
    assert payload["strong"] is True
    assert payload["yoneda"] == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]


def test_an_quiver_dot(capsys):
    assert run(["an", "quiver", "--n", "3", "--J", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("digraph quiver {")
    assert '  2 -> 1 [label="e2: -1"];' in out
    assert '  2 -> 3 [label="e3: +1"];' in out


def test_secondary_of_interval(capsys):
    assert run(["secondary", "interval4"]) == EXIT_OK
    payload = _json(capsys)
    assert len(payload["vertices"]) == 4
    assert {tuple(v["gkz"]) for v in payload["vertices"]} == {
        ("3", "0", "0", "3"), ("1", "3", "0", "2"), ("2", "0", "3", "1"), ("1", "2", "2", "1"),
    }


def test_secondary_off(capsys):
    assert run(["secondary", "interval4", "--format", "off"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "OFF"
    assert lines[1].split()[0] == "4"


def test_lafforgue_reports_xi_for_intervals(capsys):
    assert run(["lafforgue", "interval4"]) == EXIT_OK
    payload = _json(capsys)
    assert "xi" in payload
    assert len(payload["facets"]) == len(payload["xi_columns"])


def test_paths_of_interval(capsys):
    assert run(["paths", "interval4", "--sharpen", "0"]) == EXIT_OK
    payload = _json(capsys)
    assert len(payload["paths"]) == 2
    assert payload["coherent"] == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out" / "tree.dot"
    assert run(["an", "tree", "--n", "3", "--output", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert target.read_text().startswith("graph vanishing_tree {")


@pytest.mark.parametrize("argv", [
    ["an", "tree", "--J", "2"],
    ["an", "tree", "--n", "3", "--J", "7"],
    ["an", "tree", "--n", "3", "--J", "x"],
    ["an", "perversity", "--n", "3", "--format", "dot"],
    ["secondary", "no_such_configuration"],
    ["mpp", "interval4", "--sharpen", "9"],
    ["monodromy", "--n", "3", "--J", "2", "--sweep"],
    ["an", "perversity", "--n", "3", "--J", "3,2,2"],
])
def test_input_errors_exit_2(argv):
    assert run(argv) == EXIT_INPUT


def test_unseparated_clusters_exit_3(capsys):
    assert run(["monodromy", "--n", "2", "--J", "2", "--s", "0.9"]) == EXIT_NUMERIC
    err = capsys.readouterr().err
    assert "diagnostics" in err


def test_golden_round_trip(golden_db, capsys):
    argv = ["an", "tree", "--n", "4", "--J", "2", "--golden", "tree4"]
    assert run(argv) == EXIT_OK
    assert run(argv) == EXIT_OK
    capsys.readouterr()
    assert run(["golden", "list"]) == EXIT_OK
    (entry,) = _json(capsys)["goldens"]
    assert entry["name"] == "tree4"
    assert '"an-tree"' in entry["command"]


def test_golden_mismatch_exit_3(golden_db, capsys):
    GoldenRepository(db_path=golden_db).record("stale", "an-quiver", "digraph quiver {}\n")
    assert run(["an", "quiver", "--n", "3", "--golden", "stale"]) == EXIT_NUMERIC
    assert capsys.readouterr().out.startswith("digraph quiver {")


def test_stats_go_to_stderr(capsys):
    assert run(["--stats", "an", "quiver", "--n", "2"]) == EXIT_OK
    captured = capsys.readouterr()
    assert captured.out.startswith("digraph quiver {")
    assert isinstance(json.loads(captured.err.strip().splitlines()[-1]), dict)


@pytest.mark.slow
def test_monodromy_command(capsys):
    assert run(["monodromy", "--n", "2", "--J", "2", "--seed", "11"]) == EXIT_OK
    payload = _json(capsys)
    assert payload["all_match"] is True
    assert payload["J"] == [0, 1, 2, 3]


def test_verbosity_flags(capsys):
    assert run(["--quiet", "an", "quiver", "--n", "2"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("digraph quiver {")
    assert run(["--verbose", "--quiet", "an", "quiver", "--n", "2"]) == EXIT_INPUT
