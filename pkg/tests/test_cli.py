import json

import jsonschema
import pytest

from rainbowrc.cli import main
from rainbowrc.coloring import EdgeColoring
from rainbowrc.generators import complete_minus_matching, path, petersen
from rainbowrc.graph import build_graph
from rainbowrc.io import FormatError, parse_coloring_file, parse_graph_file
from rainbowrc.report import Report, load_schema

SCHEMA = load_schema()


class TestFormats:
    def test_graph(self):
        g = parse_graph_file("3 2\n0 1\n1 2\n")
        assert g == path(3)

    def test_graph_comments_and_order(self):
        g = parse_graph_file("# P3\n3 2\n# edges\n2 1\n0 1\n")
        assert g.edges == ((0, 1), (1, 2))

    def test_graph_round_trip(self):
        g = petersen()
        assert parse_graph_file(g.to_text()) == g
        assert g.to_text().splitlines()[1] == "0 7"

    @pytest.mark.parametrize(
        "text",
        ["", "3\n0 1\n", "3 2\n0 1\n", "3 1\n0 3\n", "3 1\n1 1\n", "3 2\n0 1\n1 0\n", "3 1\n0 x\n"],
    )
    def test_graph_errors(self, text):
        with pytest.raises(FormatError):
            parse_graph_file(text)

    def test_coloring(self):
        c = parse_coloring_file("2\n0 1 0\n1 2 1\n", path(3))
        assert c == EdgeColoring.of(path(3), 2, [0, 1])

    def test_coloring_round_trip(self):
        g = path(4)
        c = EdgeColoring.of(g, 3, [2, 0, 1])
        assert parse_coloring_file(c.to_text(g), g) == c

    @pytest.mark.parametrize(
        "text",
        ["2\n0 1 2\n1 2 1\n", "2\n0 1 0\n", "2\n0 1 0\n0 2 1\n", "2\n0 1 0\n0 1 1\n", "x\n", "2 3\n"],
    )
    def test_coloring_errors(self, text):
        with pytest.raises(FormatError):
            parse_coloring_file(text, path(3))


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert Report.from_json(out).to_json() == out
    return code, doc


def test_verify(capsys, files):
    g = files("p4.txt", path(4).to_text())
    good = files("c.txt", "3\n0 1 0\n1 2 1\n2 3 2\n")
    bad = files("d.txt", "3\n0 1 0\n1 2 0\n2 3 2\n")
    code, doc = run_json(capsys, "verify", "--graph", g, "--coloring", good)
    assert code == 0 and doc["result"]["rainbow_connected"]
    assert doc["result"]["witness"][2] == {"pair": [0, 3], "path": [0, 1, 2, 3]}
    code, doc = run_json(capsys, "verify", "--graph", g, "--coloring", bad)
    assert code == 1 and doc["result"]["failing_pair"] == [0, 2]


def test_check(capsys, files):
    k64 = files("k64.txt", build_graph(64, [(u, v) for u in range(64) for v in range(u + 1, 64)]).to_text())
    code, doc = run_json(capsys, "check", "--graph", k64, "-k", "2", "--theorem", "T1_3")
    assert code == 1 and doc["result"]["checks"][0]["status"] == "not_applicable"
    cmm = files("cmm.txt", complete_minus_matching(64).to_text())
    code, doc = run_json(capsys, "check", "--graph", cmm, "-k", "3")
    assert code == 0
    statuses = {c["theorem_id"]: c["status"] for c in doc["result"]["checks"]}
    assert statuses["T1_3"] == statuses["T1_7"] == "satisfied"
    assert statuses["T1_5"] == "not_applicable"


def test_rc(capsys, files):
    pet = files("pet.txt", petersen().to_text())
    code, doc = run_json(capsys, "rc", "--graph", pet)
    assert code == 0 and doc["result"]["rc"] == 3
    two = files("two.txt", "4 2\n0 1\n2 3\n")
    code, _, err = run(capsys, "rc", "--graph", two)
    assert code == 2 and "disconnected" in err
    code, _, err = run(capsys, "rc", "--graph", pet, "--max-edges", "10")
    assert code == 2
    code, doc = run_json(capsys, "rc", "--graph", pet, "--max-nodes", "1")
    assert code == 1 and doc["result"]["outcome"] == "budget_exceeded"


def test_rc_writes_certificate(capsys, files, tmp_path):
    pet = files("pet.txt", petersen().to_text())
    out = tmp_path / "cert.txt"
    assert run(capsys, "rc", "--graph", pet, "--out", str(out))[0] == 0
    assert parse_coloring_file(out.read_text(), petersen()).k == 3


def test_color(capsys, files, tmp_path):
    g = files("cmm.txt", complete_minus_matching(16).to_text())
    out = tmp_path / "col.txt"
    code, doc = run_json(capsys, "color", "--graph", g, "-k", "2", "--seed", "5", "--out", str(out))
    assert code == 0 and doc["result"]["success"]
    code, _, _ = run(capsys, "verify", "--graph", g, "--coloring", str(out))
    assert code == 0
    p3 = files("p3.txt", path(3).to_text())
    code, doc = run_json(capsys, "color", "--graph", p3, "-k", "1", "--seed", "0", "--max-iters", "7")
    assert code == 1 and doc["result"]["failures"] == 7


def test_seed_required(capsys, files, monkeypatch):
    monkeypatch.delenv("RAINBOW_SEED", raising=False)
    g = files("p3.txt", path(3).to_text())
    code, _, err = run(capsys, "color", "--graph", g, "-k", "2")
    assert code == 2 and "RAINBOW_SEED" in err
    monkeypatch.setenv("RAINBOW_SEED", "17")
    code, doc = run_json(capsys, "color", "--graph", g, "-k", "2")
    assert doc["inputs"]["seed"] == 17
    code, _, _ = run(capsys, "gen", "--family", "random_min_degree", "-n", "10", "--delta", "3",
                     "--out", files("x.txt", ""))
    assert code == 0


def test_bounds(capsys):
    code, doc = run_json(capsys, "bounds", "-k", "2", "-n", "64", "--theorem", "T1_3")
    entry = doc["result"]["entries"][0]
    assert code == 0 and entry["threshold"] == 37
    assert entry["bound_report"]["union_failure"]["exact"] == "63/128"
    assert entry["bound_report"]["per_pair_failure"]["exact"] == "1/4096"
    code, doc = run_json(capsys, "bounds", "-k", "2", "-n", "64")
    notes = {e["theorem_id"]: e["note"] for e in doc["result"]["entries"]}
    assert "k >= 3" in notes["T1_5"]
    code, _, _ = run(capsys, "bounds", "-k", "2", "-n", "64", "--theorem", "T1_7")
    assert code == 2


def test_gen_and_experiment(capsys, tmp_path):
    out = tmp_path / "g.txt"
    code, doc = run_json(capsys, "gen", "--family", "complete_minus_matching", "-n", "8", "--out", str(out))
    assert code == 0 and parse_graph_file(out.read_text()) == complete_minus_matching(8)
    code, doc = run_json(capsys, "experiment", "--graph", str(out), "-k", "2", "--trials", "30",
                         "--seed", "1", "--theorem", "T1_3")
    assert code == 0 and doc["result"]["stats"]["trials"] == 30


def test_experiment_csv(capsys):
    code, out, _ = run(capsys, "experiment", "--family", "cycle", "-n", "6", "-k", "3",
                       "--trials", "10", "--seed", "2", "--csv")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("parameter,value,n,m,k") and len(lines) == 2


def test_sweep(capsys):
    code, doc = run_json(capsys, "sweep", "--family", "cycle", "-n", "6", "-k", "2", "--trials", "10",
                         "--seed", "2", "--param", "k", "--values", "2,3,4")
    assert code == 0 and [r["k"] for r in doc["result"]["rows"]] == [2, 3, 4]


def test_human_output(capsys, files):
    g = files("p4.txt", path(4).to_text())
    c = files("c.txt", "3\n0 1 0\n1 2 1\n2 3 2\n")
    code, out, _ = run(capsys, "verify", "--graph", g, "--coloring", c)
    assert out.splitlines()[:3] == ["command: verify", "failing_pair: None", "k: 3"]


def test_timing_only_on_request(capsys):
    _, doc = run_json(capsys, "bounds", "-k", "3", "-n", "27")
    assert doc["timing"] is None
    _, doc = run_json(capsys, "bounds", "-k", "3", "-n", "27", "--timing")
    assert doc["timing"]["seconds"] >= 0


@pytest.mark.parametrize("argv", [["frobnicate"], ["rc"], ["check", "--graph", "x", "-k", "two"]])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_missing_file(capsys):
    code, _, err = run(capsys, "rc", "--graph", "/nonexistent/graph.txt")
    assert code == 2 and "No such file" in err
