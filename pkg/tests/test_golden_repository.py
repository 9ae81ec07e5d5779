"""
Tests for the SQLite golden store.
"""

from db.golden_repository import GoldenRepository, digest


def test_record_and_get(tmp_path):
    repo = GoldenRepository(db_path=tmp_path / "goldens.db")
    value = repo.record("tree7", "an-tree", "graph {}\n")
    assert value == digest("graph {}\n")
    stored = repo.get("tree7")
    assert stored["command"] == "an-tree"
    assert stored["payload"] == "graph {}\n"
    assert repo.get("missing") is None


def test_compare_or_record(tmp_path):
    repo = GoldenRepository(db_path=tmp_path / "goldens.db")
    assert repo.compare_or_record("p", "an-perversity", "[1, 1, 1]")
    assert repo.compare_or_record("p", "an-perversity", "[1, 1, 1]")
    assert not repo.compare_or_record("p", "an-perversity", "[0, 0, 0]")
    assert repo.get("p")["payload"] == "[1, 1, 1]"


def test_list_and_delete(tmp_path):
    repo = GoldenRepository(db_path=tmp_path / "nested" / "goldens.db")
    repo.record("b", "secondary", "x")
    repo.record("a", "lafforgue", "y")
    assert [g["name"] for g in repo.list_goldens()] == ["a", "b"]
    assert "payload" not in repo.list_goldens()[0]
    assert repo.delete("a")
    assert not repo.delete("a")
    assert [g["name"] for g in repo.list_goldens()] == ["b"]


def test_store_survives_reopening(tmp_path):
    path = tmp_path / "goldens.db"
    GoldenRepository(db_path=path).record("kept", "an-quiver", "digraph {}\n")
    assert GoldenRepository(db_path=path).get("kept")["digest"] == digest("digraph {}\n")
