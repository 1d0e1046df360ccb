import json

import pytest

from circumference.cli import main
from circumference.extremal import ExtremalParams, build_extremal
from circumference.graph_core import parse_graph6, to_graph6

BOWTIE_EDGES = "0 1\n0 2\n1 2\n2 3\n2 4\n3 4\n"


@pytest.fixture
def bowtie_file(tmp_path):
    p = tmp_path / "bowtie.txt"
    p.write_text(BOWTIE_EDGES)
    return str(p)


def test_solve_bowtie(bowtie_file, capsys):
    assert main(["solve", bowtie_file]) == 0
    out = json.loads(capsys.readouterr().out)
    assert (out["n"], out["m"], out["delta"], out["circumference"]) == (5, 6, 2, 3)
    assert [(c["p_bar"], c["c_bar"]) for c in out["cycle_sets"]] == [(1, 2), (1, 2)]


def test_solve_inline_graph6(capsys):
    assert main(["solve", "D?{"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["circumference"] == 2 and out["degenerate"]


def test_extremal_emit(capsys):
    assert main(["extremal", "--kappa", "2", "--delta", "3", "--emit"]) == 0
    text = capsys.readouterr().out.strip()
    assert text == to_graph6(build_extremal(ExtremalParams(2, 3)))
    assert parse_graph6(text).n == 8


def test_extremal_invariants(capsys):
    assert main(["extremal", "--kappa", "2", "--delta", "4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["sharp"] and out["measured"]["circumference"] == 8


def test_verify_exhaustive_four(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", "--corpus", "exhaustive", "--n", "4", "--output", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["total"] == 64 and doc["summary"]["violations"] == 0


def test_verify_csv_and_fast(tmp_path, capsys):
    out = tmp_path / "report.csv"
    assert main(["verify", "--corpus", "gnp", "--n", "6", "--p", "0.5", "--count", "10", "--seed", "1",
                 "--format", "csv", "--output", str(out)]) == 0
    assert out.read_text().startswith("graph_id,")
    assert main(["verify", "--corpus", "exhaustive", "--n", "5", "--fast"]) == 0
    assert json.loads(capsys.readouterr().out)["graphs"] == 1024


def test_hunt(tmp_path, capsys):
    report = tmp_path / "hunt.json"
    assert main(["hunt", "--n", "8", "--count", "20", "--seed", "3", "--output", str(report)]) == 0
    assert json.loads(capsys.readouterr().out)["violations"] == 0
    assert json.loads(report.read_text())["summary"]["total"] == 20


def test_spread(bowtie_file, capsys):
    assert main(["spread", "--graph", bowtie_file, "--remove", "0,1,2", "--host-path", "3,4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["count"] == 1
    assert out["spreadings"][0]["classification"]["U0"] == [3, 4]


def test_enumerate(capsys):
    assert main(["enumerate", "--n", "3"]) == 0
    lines = capsys.readouterr().out.split()
    assert len(lines) == 8 and len(set(lines)) == 8


@pytest.mark.parametrize("argv", [["verify", "--bogus"], ["nope"], ["verify", "--corpus", "gnp", "--n", "5"],
                                  ["solve", "not-a-graph-\x01"]])
def test_usage_errors_exit_two(argv, capsys):
    assert main(argv) == 2
