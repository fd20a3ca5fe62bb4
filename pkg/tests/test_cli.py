from __future__ import annotations

import subprocess
import sys
from pathlib import Path

import pytest

from nilgraph.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_graph2algebra_golden(capsys, golden):
    code, out, _ = run(capsys, "graph2algebra", GOLDEN / "k2.graph", "--p", 3)
    assert code == 0 and out == golden("k2_lie_p3.txt")
    code, out, _ = run(capsys, "graph2algebra", GOLDEN / "p3.graph", "--p", 3, "--kind", "commutative")
    assert code == 0 and out == golden("p3_commutative_p3.txt")


def test_graph2algebra_errors(capsys, tmp_path):
    empty = tmp_path / "empty"
    empty.write_text("")
    code, _, err = run(capsys, "graph2algebra", empty)
    assert code == 2 and "empty" in err
    code, _, err = run(capsys, "graph2algebra", GOLDEN / "k2.graph", "--p", 2)
    assert code == 2
    code, _, err = run(capsys, "graph2algebra", tmp_path / "missing")
    assert code == 2


def test_graph2group(capsys, golden, tmp_path):
    code, out, _ = run(capsys, "graph2group", GOLDEN / "k2.graph", "--p", 3)
    assert code == 0 and out == golden("k2_presentation_p3.txt")
    one = tmp_path / "one"
    one.write_text("1\n")
    code, out, _ = run(capsys, "graph2group", one)
    assert "g1^27" in out and "Comm" not in out


def test_group2graph(capsys):
    code, out, _ = run(capsys, "group2graph", GOLDEN / "z3.table")
    assert code == 0 and out.splitlines()[0] == "3 27"
    code, out, _ = run(capsys, "group2graph", GOLDEN / "z3.table", "--simple")
    assert code == 0 and int(out.splitlines()[0]) > 30
    code, _, err = run(capsys, "group2graph", GOLDEN / "z2.table")
    assert code == 2 and ">= 3" in err


def test_check_iso(capsys, tmp_path):
    code, out, _ = run(capsys, "check-iso", "graph", GOLDEN / "c4a.graph", GOLDEN / "c4b.graph")
    assert code == 0 and out.startswith("isomorphic")
    code, _, _ = run(capsys, "check-iso", "group-small", GOLDEN / "z4.table", GOLDEN / "klein.table")
    assert code == 1
    code, _, _ = run(capsys, "check-iso", "graph", GOLDEN / "c4a.graph", GOLDEN / "z4.table")
    assert code == 2
    code, out, _ = run(capsys, "group2graph", GOLDEN / "z4.table")
    (tmp_path / "z4.mg").write_text(out)
    code, out, _ = run(capsys, "check-iso", "multigraph", tmp_path / "z4.mg", tmp_path / "z4.mg")
    assert code == 0 and "e1->" in out


def test_simsim_command(capsys, tmp_path):
    (tmp_path / "x").write_text("2 3\n1 1\n0 1\n0 0\n1 0\n")
    (tmp_path / "y").write_text("2 3\n1 0\n1 1\n0 1\n0 0\n")
    code, out, _ = run(capsys, "simsim", tmp_path / "x", tmp_path / "y")
    assert code == 0 and "via" in out


def test_verify_sizes(capsys):
    code, out, _ = run(capsys, "verify", "sizes", "--max-n", 4)
    assert code == 0
    assert out.strip().splitlines()[-1] == "RESULT pass=1 fail=0"
    assert "c = " in out


def test_verify_suite_flag(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "wild", "--p", 3, "--max-n", 3)
    assert code == 0 and out.strip().endswith("RESULT pass=1 fail=0")


def test_bad_arguments(capsys):
    code, _, _ = run(capsys, "verify", "nope")
    assert code == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "nilgraph", "check-iso", "group-small", GOLDEN / "z4.table", GOLDEN / "z4.table"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0
