"""Variable and connector gadgets.

Both gadgets are found by exhaustive search against the properties the
reduction's correctness argument needs, then frozen below as constants.
:func:`variable_gadget` / :func:`connector_gadget` re-validate the frozen
constants on first use; :func:`synth_variable_gadget` /
:func:`synth_connector_gadget` redo the search from scratch.

Candidate order for both searches: fewer vertices first, then fewer
edges, then the lexicographically smaller sorted edge list.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterator

from ..errors import IntegrityError
from ..graph import B, Color, Edge, Graph, W, admissible_coloring, is_connected
from ..oracle import (
    PatternKind,
    PatternRequirement,
    PatternWitness,
    enumerate_spanning_trees,
    pattern_witness,
)

# connection vertex of the variable gadget; endpoints of the connector gadget
CONNECTION = 0
END_A, END_B = 0, 1

# Frozen search results.  The variable gadget is a triangle 0-1-2 with a
# claw 1-3, 3-4, 3-5; its even trees drop edge 1-2 (connection vertex
# white) or edge 0-1 (connection vertex black).
VARIABLE_GADGET_EDGES: tuple[Edge, ...] = ((0, 1), (0, 2), (1, 2), (1, 3), (3, 4), (3, 5))
CONNECTOR_GADGET_N = 4
CONNECTOR_GADGET_EDGES: tuple[Edge, ...] = ((0, 2), (0, 3), (1, 2), (2, 3))


@dataclass(frozen=True)
class PatternRow:
    requirement: PatternRequirement
    witness: PatternWitness | None

    @property
    def passed(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True)
class VariableGadget:
    """Six-vertex gadget with connection vertex ``CONNECTION``.

    ``true_tree`` colors the connection vertex white, ``false_tree`` black
    (leaves black in both).
    """

    graph: Graph
    boundary: tuple[int, ...]
    true_tree: frozenset[Edge]
    false_tree: frozenset[Edge]
    true_coloring: tuple[Color, ...]
    false_coloring: tuple[Color, ...]


@dataclass(frozen=True)
class ConnectorGadget:
    graph: Graph
    boundary: tuple[int, int]
    table: tuple[PatternRow, ...]

    def witness(self, kind: PatternKind, color_a: Color, color_b: Color) -> PatternWitness:
        for row in self.table:
            req = row.requirement
            if req.kind is kind and req.colors == {END_A: color_a, END_B: color_b}:
                if row.witness is None:
                    raise IntegrityError(f"connector gadget lacks a {kind.value} pattern")
                return row.witness
        raise KeyError((kind, color_a, color_b))


# ---------------------------------------------------------------------------
# contracts


def _relaxed_trees(g: Graph, free: int) -> list[tuple[frozenset[Edge], tuple[Color, ...]]]:
    """Spanning trees whose leaves other than ``free`` can all be black,
    with that coloring (``free`` colored consistently)."""
    out = []
    for t in enumerate_spanning_trees(g):
        tg = Graph(g.n, frozenset(t))
        leaves = [v for v in range(g.n) if tg.degree(v) == 1 and v != free]
        coloring = _anchored_coloring(tg, leaves)
        if coloring is not None:
            out.append((frozenset(t), coloring))
    return out


def _anchored_coloring(tree: Graph, blacks: list[int]) -> tuple[Color, ...] | None:
    side = [-1] * tree.n
    side[0] = 0
    stack = [0]
    while stack:
        x = stack.pop()
        for y in tree.adj[x]:
            if side[y] == -1:
                side[y] = 1 - side[x]
                stack.append(y)
    if not blacks:
        return None
    s = side[blacks[0]]
    if any(side[v] != s for v in blacks):
        return None
    return tuple(B if side[v] == s else W for v in range(tree.n))


def variable_gadget_problems(g: Graph) -> list[str]:
    """Everything wrong with ``g`` as a variable gadget (empty when it is one).

    Requirements: six vertices; connected; exactly two degree-1 vertices,
    neither of them the connection vertex, which has degree >= 2; exactly
    two spanning even trees, coloring the connection vertex differently; and
    no other spanning tree keeps every leaf except the connection vertex
    black.  The last condition is what lets a tree of the whole reduction
    graph be read back as an assignment.
    """
    problems = []
    if g.n != 6:
        problems.append("gadget must have six vertices")
        return problems
    if not is_connected(g):
        return ["gadget is disconnected"]
    pendants = [v for v in range(g.n) if g.degree(v) == 1]
    if len(pendants) != 2 or CONNECTION in pendants:
        problems.append("need exactly two degree-1 vertices besides the connection vertex")
    if g.degree(CONNECTION) < 2:
        problems.append("connection vertex must have degree >= 2")
    evens = []
    for t in enumerate_spanning_trees(g):
        c = admissible_coloring(Graph(g.n, frozenset(t)))
        if c is not None:
            evens.append((frozenset(t), tuple(c)))
    if len(evens) != 2:
        problems.append(f"expected 2 spanning even trees, found {len(evens)}")
    elif evens[0][1][CONNECTION] is evens[1][1][CONNECTION]:
        problems.append("both even trees color the connection vertex alike")
    relaxed = _relaxed_trees(g, CONNECTION)
    if sorted(t for t, _ in relaxed) != sorted(t for t, _ in evens):
        problems.append("some non-even spanning tree keeps all non-connection leaves black")
    return problems


def connector_requirements() -> list[PatternRequirement]:
    reqs = []
    for kind in (PatternKind.CONNECTOR, PatternKind.DISCONNECTOR):
        for ca, cb in itertools.product((B, W), repeat=2):
            reqs.append(PatternRequirement((END_A, END_B), kind, {END_A: ca, END_B: cb}))
    return reqs


def connector_table(g: Graph) -> tuple[PatternRow, ...]:
    return tuple(PatternRow(req, pattern_witness(g, req)) for req in connector_requirements())


def connector_gadget_problems(g: Graph) -> list[str]:
    if not 4 <= g.n <= 8:
        return ["connector gadget must have 4..8 vertices"]
    if not is_connected(g):
        return ["gadget is disconnected"]
    problems = []
    for row in connector_table(g):
        if not row.passed:
            req = row.requirement
            problems.append(
                f"no {req.kind.value} pattern with a={req.colors[END_A].value} b={req.colors[END_B].value}"
            )
    return problems


# ---------------------------------------------------------------------------
# search


def _candidates(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for m in range(n - 1, len(pairs) + 1):
        for es in itertools.combinations(pairs, m):
            yield Graph(n, frozenset(es))


def synth_variable_gadget() -> Graph:
    for g in _candidates(6):
        if not is_connected(g):
            continue
        degs = [g.degree(v) for v in range(6)]
        if degs.count(1) != 2 or degs[CONNECTION] < 2:
            continue
        if not variable_gadget_problems(g):
            return g
    raise IntegrityError("no six-vertex graph meets the variable gadget contract")


def synth_connector_gadget() -> Graph:
    for n in range(4, 9):
        for g in _candidates(n):
            if is_connected(g) and not connector_gadget_problems(g):
                return g
    raise IntegrityError("no graph on 4..8 vertices meets the connector gadget contract")


# ---------------------------------------------------------------------------
# cached, validated constants

_lock = threading.Lock()
_cache: dict[str, object] = {}


def _build_variable_gadget(edges: tuple[Edge, ...]) -> VariableGadget:
    g = Graph.from_edges(6, edges)
    problems = variable_gadget_problems(g)
    if problems:
        raise IntegrityError("variable gadget certificate failed: " + "; ".join(problems))
    evens = []
    for t in enumerate_spanning_trees(g):
        c = admissible_coloring(Graph(g.n, frozenset(t)))
        if c is not None:
            evens.append((frozenset(t), tuple(c)))
    (t_true, c_true), (t_false, c_false) = sorted(
        evens, key=lambda tc: tc[1][CONNECTION] is B
    )
    return VariableGadget(g, (CONNECTION,), t_true, t_false, c_true, c_false)


def _build_connector_gadget(n: int, edges: tuple[Edge, ...]) -> ConnectorGadget:
    g = Graph.from_edges(n, edges)
    problems = connector_gadget_problems(g)
    if problems:
        raise IntegrityError("connector gadget certificate failed: " + "; ".join(problems))
    return ConnectorGadget(g, (END_A, END_B), connector_table(g))


def variable_gadget() -> VariableGadget:
    with _lock:
        if "variable" not in _cache:
            _cache["variable"] = _build_variable_gadget(VARIABLE_GADGET_EDGES)
        return _cache["variable"]  # type: ignore[return-value]


def connector_gadget() -> ConnectorGadget:
    with _lock:
        if "connector" not in _cache:
            _cache["connector"] = _build_connector_gadget(CONNECTOR_GADGET_N, CONNECTOR_GADGET_EDGES)
        return _cache["connector"]  # type: ignore[return-value]


def clear_cache() -> None:
    with _lock:
        _cache.clear()
