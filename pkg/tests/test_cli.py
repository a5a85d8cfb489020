import csv
import json
import os
import subprocess
import sys

import pytest

from hyperkit import Hypergraph, simple_order
from hyperkit.cli import main
from hyperkit.io import load, save


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_generate_k_uniform(workdir):
    argv = ["generate", "--model", "k-uniform", "--n", "10", "--k", "3", "--p", "0.1",
            "--seed", "7", "-o", "g.json"]
    assert main(argv) == 0
    h = load("g.json")
    assert h.num_edges > 0 and all(len(e) == 3 for e in h.edges)
    first = (workdir / "g.json").read_bytes()
    manifest = json.loads((workdir / "g.json.manifest.json").read_text())
    assert manifest["argv"] == argv and manifest["seed"] == 7
    assert main(argv) == 0
    assert (workdir / "g.json").read_bytes() == first


def test_generate_bad_probability(workdir, capsys):
    code = main(["generate", "--model", "k-uniform", "--n", "10", "--k", "3", "--p", "1.5",
                 "--seed", "7", "-o", "g.json"])
    assert code == 2
    assert "InvalidProbability" in capsys.readouterr().err


def test_generate_missing_param(workdir, capsys):
    assert main(["generate", "--model", "simple-order", "--n", "5", "--p", "0.1",
                 "--seed", "1", "-o", "g.json"]) == 2
    assert "--k" in capsys.readouterr().err


def test_generate_requires_seed(workdir):
    assert main(["generate", "--model", "simple-powersets", "--n", "3", "--p", "1",
                 "-o", "g.json"]) == 2


def test_metrics_complete(workdir, capsys):
    main(["generate", "--model", "simple-powersets", "--n", "3", "--p", "1", "--seed", "0",
          "-o", "g.json"])
    capsys.readouterr()
    assert main(["metrics", "-i", "g.json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["density"] == 1.0
    assert report["reasons"] == {}


def test_metrics_edgeless(workdir, capsys):
    save(Hypergraph(vertices=range(4)), workdir / "e.json")
    assert main(["metrics", "-i", "e.json", "-o", "m.json"]) == 0
    report = json.loads((workdir / "m.json").read_text())
    assert report["girth"] is None
    assert report["reasons"]["girth"] == "no edges"
    assert report["density"] == 0.0


def test_metrics_kv_and_k_uniform(workdir, capsys):
    main(["generate", "--model", "k-uniform", "--n", "8", "--k", "4", "--p", "0.3",
          "--seed", "1", "-o", "g.json"])
    capsys.readouterr()
    assert main(["metrics", "-i", "g.json", "--format", "kv"]) == 0
    lines = dict(line.split("=", 1) for line in capsys.readouterr().out.splitlines())
    assert float(lines["average_edge_size"]) == 4.0


def test_metrics_bad_document(workdir):
    (workdir / "bad.json").write_text('{"format_version": "1.0", "vertices": [0], "edges": [[9]]}')
    assert main(["metrics", "-i", "bad.json"]) == 2
    (workdir / "broken.json").write_text("{nope")
    assert main(["metrics", "-i", "broken.json"]) == 2


def test_analyze_reduce(workdir):
    save(Hypergraph(edges=[{1, 2}, {1, 2, 3}]), workdir / "g.json")
    assert main(["analyze", "-i", "g.json", "--op", "reduce", "-o", "r.json"]) == 0
    assert load("r.json").edges == [frozenset({1, 2, 3})]


def test_analyze_expand_and_components(workdir):
    save(Hypergraph(edges=[{0, 1, 2}], vertices=[3]), workdir / "g.json")
    assert main(["analyze", "-i", "g.json", "--op", "expand", "--mode", "clique", "-o", "c.tsv"]) == 0
    assert (workdir / "c.tsv").read_text().splitlines() == ["0\t1", "0\t2", "1\t2"]
    assert main(["analyze", "-i", "g.json", "--op", "expand", "--mode", "star", "-o", "s.tsv"]) == 0
    assert len((workdir / "s.tsv").read_text().splitlines()) == 3
    assert main(["analyze", "-i", "g.json", "--op", "components", "-o", "cc.json"]) == 0
    assert json.loads((workdir / "cc.json").read_text()) == [[0, 1, 2], [3]]


def test_analyze_bad_op(workdir):
    save(Hypergraph(edges=[{0}]), workdir / "g.json")
    assert main(["analyze", "-i", "g.json", "--op", "frobnicate", "-o", "x"]) == 2
    assert main(["analyze", "-i", "g.json", "--op", "expand", "-o", "x"]) == 2


def test_export(workdir):
    save(Hypergraph(edges=[{0, 1}, {1, 2}]), workdir / "g.json")
    assert main(["export", "-i", "g.json", "--format", "bipartite", "-o", "b.tsv"]) == 0
    assert len((workdir / "b.tsv").read_text().splitlines()) == 4
    assert main(["export", "-i", "g.json", "--format", "incidence", "-o", "i.csv"]) == 0
    assert read_csv(workdir / "i.csv") == [["e0", "e1"], ["1", "0"], ["1", "1"], ["0", "1"]]


def test_simulate_sir(workdir):
    save(simple_order(20, 3, 0.02, seed=4), workdir / "g.json")
    argv = ["simulate", "sir", "--beta", "0.4", "--gamma", "0.1", "--steps", "20",
            "--initial-infected", "1", "--seed", "1", "-i", "g.json", "-o", "sir.csv"]
    assert main(argv) == 0
    rows = read_csv(workdir / "sir.csv")
    assert rows[0] == ["step", "S", "I", "R"]
    assert len(rows) == 22
    assert all(sum(map(int, r[1:])) == 20 for r in rows[1:])
    state = json.loads((workdir / "sir.state.json").read_text())
    assert state["kind"] == "sir" and len(state["states"]) == 20


def test_simulate_schelling(workdir):
    save(simple_order(15, 3, 0.02, seed=0), workdir / "g.json")
    argv = ["simulate", "schelling", "--labels", "3", "--per-label", "3", "--tau", "0.2",
            "--iters", "100", "--seed", "3", "-i", "g.json", "-o", "s.csv"]
    assert main(argv) == 0
    rows = read_csv(workdir / "s.csv")
    assert rows[0] == ["step", "mean_G", "moves"]
    assert 2 <= len(rows) <= 102
    labels = json.loads((workdir / "s.state.json").read_text())["labels"]
    counts = [list(labels.values()).count(a) for a in range(3)]
    assert counts == [3, 3, 3]


def test_simulate_walk_zero_steps(workdir):
    save(Hypergraph(edges=[{0, 1, 2}, {2, 3, 4}]), workdir / "g.json")
    for argv in (
        ["simulate", "walk", "--steps", "0", "--start", "4", "--seed", "0", "-i", "g.json", "-o", "w.csv"],
        ["walk", "--steps", "0", "--start", "4", "--seed", "0", "-i", "g.json", "-o", "w.csv"],
    ):
        assert main(argv) == 0
        assert read_csv(workdir / "w.csv") == [["step", "vertex"], ["0", "4"]]


def test_simulate_walk_isolated_is_domain_error(workdir, capsys):
    save(Hypergraph(vertices=[0, 1, 2], edges=[{0, 1}]), workdir / "g.json")
    code = main(["simulate", "walk", "--steps", "5", "--seed", "0", "-i", "g.json", "-o", "w.csv"])
    assert code == 3
    assert "IsolatedVertex" in capsys.readouterr().err


def test_simulate_bad_params(workdir):
    save(Hypergraph(edges=[{0, 1}], vertices=[2]), workdir / "g.json")
    assert main(["simulate", "sir", "--beta", "2", "--gamma", "0.1", "--steps", "3",
                 "--seed", "0", "-i", "g.json", "-o", "x.csv"]) == 2
    assert main(["simulate", "epidemic", "--seed", "0"]) == 2


def test_simulate_runs_fan_out(workdir):
    save(simple_order(20, 3, 0.05, seed=2), workdir / "g.json")
    base = ["simulate", "sir", "--beta", "0.4", "--gamma", "0.1", "--steps", "10",
            "--seed", "9", "-i", "g.json", "--runs", "4"]
    assert main(base + ["-o", "a.csv"]) == 0
    assert main(base + ["-o", "b.csv", "--jobs", "2"]) == 0
    summary_a = read_csv(workdir / "a.csv")
    assert summary_a[0] == ["run", "S", "I", "R"] and len(summary_a) == 5
    assert summary_a == read_csv(workdir / "b.csv")
    for i in range(4):
        assert (workdir / f"a.run{i}.csv").read_bytes() == (workdir / f"b.run{i}.csv").read_bytes()


def test_replay_reproduces_outputs(workdir):
    main(["generate", "--model", "simple-order", "--n", "15", "--k", "3", "--p", "0.02",
          "--seed", "11", "-o", "g.json"])
    main(["simulate", "schelling", "--labels", "3", "--per-label", "3", "--tau", "0.2",
          "--iters", "100", "--seed", "5", "-i", "g.json", "-o", "s.csv"])
    before = (workdir / "s.csv").read_bytes()
    (workdir / "s.csv").write_text("tampered")
    assert main(["replay", "s.csv.manifest.json", "--check"]) == 0
    assert (workdir / "s.csv").read_bytes() == before


def test_replay_detects_changed_input(workdir):
    save(Hypergraph(edges=[{0, 1, 2}]), workdir / "g.json")
    main(["analyze", "-i", "g.json", "--op", "components", "-o", "c.json"])
    save(Hypergraph(edges=[{0, 1}], vertices=[2]), workdir / "g.json")
    assert main(["replay", "c.json.manifest.json", "--check"]) == 3


def test_console_entry_point(workdir):
    env = dict(os.environ, HYPERKIT_LOG="debug")
    proc = subprocess.run(
        [sys.executable, "-m", "hyperkit.cli", "generate", "--model", "simple-powersets",
         "--n", "3", "--p", "0.5", "--seed", "1", "-o", "g.json"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert "DEBUG" in proc.stderr or "INFO" in proc.stderr
