from __future__ import annotations

import threading

import networkx as nx
import pytest

from evenspan.errors import ContractViolation, IntegrityError, ParseError
from evenspan.generators import to_networkx
from evenspan.graph import Graph, verify_even_spanning_tree
from evenspan.oracle import oracle_even_spanning_tree
from evenspan.reduction import (
    Cnf,
    assignments,
    brute_force_sat,
    build_reduction,
    connector_gadget,
    extract_assignment,
    format_dimacs,
    format_map,
    parse_dimacs,
    parse_map,
    synth_connector_gadget,
    synth_variable_gadget,
    tree_from_assignment,
    variable_gadget,
)
from evenspan.reduction import gadgets
from evenspan.reduction.gadgets import (
    CONNECTION,
    CONNECTOR_GADGET_EDGES,
    VARIABLE_GADGET_EDGES,
    clear_cache,
    connector_gadget_problems,
    variable_gadget_problems,
)

from helpers import all_even_spanning_trees, all_spanning_trees


# --- DIMACS -------------------------------------------------------------------


def test_parse_dimacs_examples():
    assert parse_dimacs("p cnf 1 1\n1 0") == Cnf(1, ((1,),))
    assert parse_dimacs("p cnf 2 2\n1 2 0\n-1 0") == Cnf(2, ((1, 2), (-1,)))
    with pytest.raises(ParseError, match="tautological"):
        parse_dimacs("p cnf 1 1\n1 -1 0")


@pytest.mark.parametrize(
    "text",
    [
        "1 0\n",
        "p cnf 1 1\n2 0\n",
        "p cnf 1 2\n1 0\n",
        "p cnf x 1\n1 0\n",
        "p dnf 1 1\n1 0\n",
        "p cnf 1 1\n0\n",
        "p cnf 2 1\n1 1 0\n",
        "p cnf 1 1\np cnf 1 1\n1 0\n",
        "p cnf 1 1\n1 a 0\n",
    ],
)
def test_parse_dimacs_rejects(text):
    with pytest.raises(ParseError):
        parse_dimacs(text)


def test_dimacs_comments_and_multiline_clause():
    cnf = parse_dimacs("c hello\np cnf 3 1\n1 -2\n3 0\n")
    assert cnf.clauses == ((1, -2, 3),)


def test_dimacs_round_trip():
    cnf = Cnf(3, ((1, -2), (3,), (-1, 2, -3)))
    assert parse_dimacs(format_dimacs(cnf)) == cnf


def test_brute_force_sat():
    assert brute_force_sat(Cnf(1, ((1,), (-1,)))) is None
    assert brute_force_sat(Cnf(2, ((1, 2), (-1,)))) == {1: False, 2: True}
    assert len(list(assignments(3))) == 8


# --- gadgets ------------------------------------------------------------------


def test_variable_gadget_contract():
    vg = variable_gadget()
    g = vg.graph
    assert g.n == 6
    assert len([v for v in range(6) if g.degree(v) == 1]) == 2
    evens = all_even_spanning_trees(g)
    assert set(evens) == {vg.true_tree, vg.false_tree}
    assert vg.true_coloring[CONNECTION].value == "W"
    assert vg.false_coloring[CONNECTION].value == "B"
    for coloring, tree in ((vg.true_coloring, vg.true_tree), (vg.false_coloring, vg.false_tree)):
        for v in range(6):
            if g.degree(v) == 1:
                assert coloring[v].value == "B"
                assert sum(1 for e in tree if v in e) == 1


def test_variable_gadget_has_no_other_relaxed_tree():
    # trees where every leaf except the connection vertex can be black
    g = variable_gadget().graph
    relaxed = []
    for t in all_spanning_trees(g):
        h = nx.Graph(list(t))
        side = nx.bipartite.color(h)
        blacks = {side[v] for v in h if h.degree(v) == 1 and v != CONNECTION}
        if len(blacks) <= 1:
            relaxed.append(t)
    assert set(relaxed) == set(all_even_spanning_trees(g))


def test_connector_gadget_table():
    cg = connector_gadget()
    assert len(cg.table) == 8 and all(row.passed for row in cg.table)


def test_synthesis_reproduces_constants():
    assert synth_variable_gadget() == Graph.from_edges(6, VARIABLE_GADGET_EDGES)
    assert synth_connector_gadget().edges == frozenset(CONNECTOR_GADGET_EDGES)


def test_contract_checkers_reject_bad_gadgets():
    assert variable_gadget_problems(Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]))
    assert connector_gadget_problems(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))


def test_corrupted_constant_fails_validation(monkeypatch):
    monkeypatch.setattr(gadgets, "VARIABLE_GADGET_EDGES", ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5)))
    clear_cache()
    try:
        with pytest.raises(IntegrityError):
            variable_gadget()
    finally:
        monkeypatch.undo()
        clear_cache()
    assert variable_gadget().graph.m == len(VARIABLE_GADGET_EDGES)


def test_cache_single_initialization_under_threads():
    clear_cache()
    results = []

    def grab():
        results.append(variable_gadget())

    threads = [threading.Thread(target=grab) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r is results[0] for r in results)


# --- construction -------------------------------------------------------------


def test_single_positive_clause_counts():
    vg = variable_gadget()
    g, rmap = build_reduction(Cnf(1, ((1,),)))
    assert g.n == 6 + 3
    assert g.m == vg.graph.m + 2 + 1


def test_contradiction_counts():
    g, rmap = build_reduction(Cnf(1, ((1,), (-1,))))
    assert g.n == 6 + 3 + 3 + 1 + 2
    assert oracle_even_spanning_tree(g) is None


def test_two_variables_one_connector():
    _, rmap = build_reduction(Cnf(2, ((1, -2),)))
    assert len(rmap.connector) == 1
    assert rmap.connector[0][0] == rmap.connection(1)
    assert rmap.connector[0][1] == rmap.connection(2)


def test_roles_are_a_bijection():
    _, rmap = build_reduction(Cnf(3, ((1, -2), (-1, 3), (2,))))
    assert len(rmap.roles) == rmap.graph.n
    assert len({str(r) for r in rmap.roles}) == rmap.graph.n


def test_clause_ends_are_pendant():
    g, rmap = build_reduction(Cnf(2, ((1, -2), (2,))))
    for _, _, end in rmap.clause_path:
        assert g.degree(end) == 1


def test_connection_vertices_are_cut_vertices():
    for cnf in (Cnf(1, ((1,),)), Cnf(2, ((1,),)), Cnf(3, ((1, -2), (-3,)))):
        g, rmap = build_reduction(cnf)
        cuts = set(nx.articulation_points(to_networkx(g)))
        assert all(rmap.connection(i) in cuts for i in range(1, cnf.num_vars + 1))


def test_forward_construction_examples():
    cnf = Cnf(1, ((1,),))
    g, rmap = build_reduction(cnf)
    t = tree_from_assignment(cnf, rmap, {1: True})
    assert t is not None and verify_even_spanning_tree(g, t.edges).ok
    assert tuple(sorted((rmap.connection(1), rmap.clause_path[0][0]))) in t.edges
    assert tree_from_assignment(cnf, rmap, {1: False}) is None

    neg = Cnf(1, ((-1,),))
    g, rmap = build_reduction(neg)
    t = tree_from_assignment(neg, rmap, [False])
    p = rmap.literal_mid[(1, 1)]
    assert verify_even_spanning_tree(g, t.edges).ok
    assert tuple(sorted((rmap.connection(1), p))) in t.edges
    assert tuple(sorted((p, rmap.clause_path[0][0]))) in t.edges


def test_extract_examples():
    cnf = Cnf(1, ((1,),))
    g, rmap = build_reduction(cnf)
    assert extract_assignment(rmap, oracle_even_spanning_tree(g)) == {1: True}
    neg = Cnf(1, ((-1,),))
    g, rmap = build_reduction(neg)
    assert extract_assignment(rmap, oracle_even_spanning_tree(g)) == {1: False}


def test_extract_rejects_non_even_tree():
    cnf = Cnf(1, ((1,),))
    g, rmap = build_reduction(cnf)
    odd = next(t for t in all_spanning_trees(g) if not verify_even_spanning_tree(g, t).ok)
    with pytest.raises(ContractViolation):
        extract_assignment(rmap, odd)


def test_assignment_length_checked():
    cnf = Cnf(2, ((1,),))
    _, rmap = build_reduction(cnf)
    with pytest.raises(ContractViolation):
        tree_from_assignment(cnf, rmap, [True])


# --- map file -----------------------------------------------------------------


def test_map_round_trip():
    cnf = Cnf(2, ((1, -2), (-1,)))
    _, rmap = build_reduction(cnf)
    text = format_map(rmap)
    back = parse_map(text)
    assert back.cnf == cnf and back.roles == rmap.roles
    assert back.graph == rmap.graph


def test_map_lines_are_id_role_params():
    _, rmap = build_reduction(Cnf(1, ((-1,),)))
    lines = [l for l in format_map(rmap).splitlines() if l and l[0].isdigit()]
    assert lines[0] == "0 connection 1"
    assert "9 literal-path 1 1 mid" in lines


def test_map_tampering_detected():
    _, rmap = build_reduction(Cnf(1, ((1,),)))
    text = format_map(rmap)
    with pytest.raises(ParseError):
        parse_map(text.replace("6 clause-path 1 w", "6 garbage 1 1 1"))
    with pytest.raises(ParseError):
        parse_map("\n".join(l for l in text.splitlines() if not l.startswith("8 ")))
    with pytest.raises(IntegrityError):
        parse_map(text.replace("tree-true ", "tree-true 4-5 "))
    with pytest.raises(ParseError):
        parse_map("clause 1\n")
