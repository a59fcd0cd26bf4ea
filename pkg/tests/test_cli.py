from __future__ import annotations

import io
import subprocess
import sys

import pytest

from evenspan.cli import (
    EXIT_DATA,
    EXIT_NOTINCLASS,
    EXIT_NOTREE,
    EXIT_OK,
    EXIT_REJECT,
    EXIT_SOFTWARE,
    EXIT_USAGE,
    run,
)
from evenspan.generators import complete, cycle, net, path
from evenspan.graph import format_graph, parse_graph, parse_tree, verify_even_spanning_tree
from evenspan.reduction import gadgets, parse_map
from evenspan.reduction.gadgets import clear_cache


def call(*argv) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str):
        p = tmp_path / name
        p.write_text(text)
        return p

    return _write


# --- solve / verify / oracle --------------------------------------------------


def test_solve_net_as_block(write):
    code, out, _ = call("solve", write("net.txt", format_graph(net())), "--class", "block")
    assert code == EXIT_NOTREE
    assert "no spanning even tree" in out
    assert "DisconnectedAux" in out


def test_solve_found_tree_is_valid(write):
    gfile = write("k4.txt", format_graph(complete(4)))
    code, out, _ = call("solve", gfile)
    assert code == EXIT_OK
    assert out.startswith("# class: ")
    t, colors = parse_tree(out)
    assert verify_even_spanning_tree(complete(4), t.edges).ok
    assert colors is not None


def test_solve_not_in_class(write):
    code, out, _ = call("solve", write("c5.txt", format_graph(cycle(5))), "--class", "split")
    assert code == EXIT_NOTINCLASS
    assert out.startswith("not in class split")


def test_solve_dot(write, tmp_path):
    dot = tmp_path / "out.dot"
    code, _, _ = call("solve", write("p3.txt", format_graph(path(3))), "--dot", dot)
    assert code == EXIT_OK
    assert dot.read_text().startswith("graph G {")


def test_verify_star_in_k4(write):
    g = write("k4.txt", format_graph(complete(4)))
    t = write("star.txt", "4 3\n0 1\n0 2\n0 3\n")
    code, out, _ = call("verify", g, t)
    assert code == EXIT_OK
    assert out == "ok\ncolors:\nW B B B\n"


def test_verify_rejects_odd_path(write):
    g = write("c4.txt", format_graph(cycle(4)))
    t = write("p.txt", "4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = call("verify", g, t)
    assert code == EXIT_REJECT
    assert out.startswith("rejected [even]")


def test_verify_rejects_wrong_colors(write):
    g = write("k4.txt", format_graph(complete(4)))
    t = write("star.txt", "4 3\n0 1\n0 2\n0 3\ncolors:\nB W W W\n")
    code, out, _ = call("verify", g, t)
    assert code == EXIT_REJECT and "coloring" in out


def test_oracle_cap(write):
    g = write("k6.txt", format_graph(complete(6)))
    code, out, _ = call("oracle", g)
    assert code == EXIT_OK
    code, out, _ = call("oracle", write("c4.txt", format_graph(cycle(4))))
    assert code == EXIT_NOTREE and out == "no spanning even tree\n"


def test_oracle_cap_exceeded(write):
    # paw: the first complete tree reached is odd, so a cap of one trips
    g = write("paw.txt", "4 4\n0 3\n1 2\n1 3\n2 3\n")
    code, out, _ = call("oracle", g, "--cap", "1")
    assert code == EXIT_REJECT and out.startswith("undecided")


def test_recognize_witnesses(write):
    code, out, _ = call("recognize", write("p4.txt", format_graph(path(4))))
    assert code == EXIT_OK
    assert "split\n  clique: 1 2\n  independent: 0 3\n" in out
    assert "  order: " in out
    code, out, _ = call("recognize", write("c5.txt", format_graph(cycle(5))))
    assert code == EXIT_NOTINCLASS and out == ""


# --- reduce / extract ---------------------------------------------------------


def test_reduce_unsat_then_oracle(write, tmp_path):
    cnf = write("f.cnf", "p cnf 1 2\n1 0\n-1 0\n")
    g, m = tmp_path / "g.txt", tmp_path / "g.map"
    code, out, _ = call("reduce", cnf, "-o", g, "-m", m)
    assert code == EXIT_OK and out.startswith("wrote graph with 15 vertices")
    assert parse_map(m.read_text()).graph == parse_graph(g.read_text())
    code, _, _ = call("oracle", g)
    assert code == EXIT_NOTREE


def test_reduce_solve_extract(write, tmp_path):
    cnf = write("f.cnf", "p cnf 2 2\n1 2 0\n-1 0\n")
    g, m, dot = tmp_path / "g.txt", tmp_path / "g.map", tmp_path / "g.dot"
    assert call("reduce", cnf, "-o", g, "-m", m, "--dot", dot)[0] == EXIT_OK
    assert "connection" in dot.read_text()
    code, tree, _ = call("oracle", g)
    assert code == EXIT_OK
    t = write("t.txt", tree)
    code, out, _ = call("extract", m, t)
    assert code == EXIT_OK
    assert out == "v1 = false\nv2 = true\n"


def test_reduce_is_byte_identical(write, tmp_path):
    cnf = write("f.cnf", "p cnf 3 2\n1 -2 0\n2 3 0\n")
    outputs = []
    for k in range(2):
        g, m = tmp_path / f"g{k}.txt", tmp_path / f"m{k}.map"
        call("reduce", cnf, "-o", g, "-m", m)
        outputs.append((g.read_bytes(), m.read_bytes()))
    assert outputs[0] == outputs[1]


def test_extract_rejects_size_mismatch(write, tmp_path):
    cnf = write("f.cnf", "p cnf 1 1\n1 0\n")
    g, m = tmp_path / "g.txt", tmp_path / "g.map"
    call("reduce", cnf, "-o", g, "-m", m)
    code, _, err = call("extract", m, write("t.txt", "3 2\n0 1\n1 2\n"))
    assert code == EXIT_DATA and err.startswith("error:")


# --- exit codes ---------------------------------------------------------------


def test_usage_errors(tmp_path):
    assert call("frobnicate")[0] == EXIT_USAGE
    assert call()[0] == EXIT_USAGE
    code, _, err = call("oracle", tmp_path / "missing.txt")
    assert code == EXIT_USAGE and "cannot read" in err
    assert call("oracle", tmp_path / "x", "--cap", "0")[0] == EXIT_USAGE


def test_data_errors(write):
    code, _, err = call("solve", write("bad.txt", "2 1\n0 0\n"))
    assert code == EXIT_DATA and "self-loop" in err
    code, _, err = call("solve", write("split.txt", "2 0\n"))
    assert code == EXIT_DATA and "not connected" in err
    assert call("reduce", write("f.cnf", "p cnf 1 1\n1 -1 0\n"), "-o", "x", "-m", "y")[0] == EXIT_DATA


def test_selfcheck_passes():
    code, out, _ = call("selfcheck", "--max-n", "5")
    assert code == EXIT_OK
    assert "FAIL" not in out and out.endswith("all checks passed\n")


def test_selfcheck_detects_corrupt_gadget(monkeypatch):
    monkeypatch.setattr(gadgets, "VARIABLE_GADGET_EDGES", ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5)))
    clear_cache()
    try:
        code, out, err = call("selfcheck", "--max-n", "4")
    finally:
        monkeypatch.undo()
        clear_cache()
    assert code == EXIT_SOFTWARE
    assert "FAIL variable gadget certificate" in out
    assert err.startswith("integrity failure")


def test_console_entry_point(write):
    g = write("p3.txt", format_graph(path(3)))
    proc = subprocess.run([sys.executable, "-m", "evenspan.cli", "solve", str(g)], capture_output=True, text=True)
    assert proc.returncode == EXIT_OK, proc.stderr
