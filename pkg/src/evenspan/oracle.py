"""Exhaustive ground truth for small graphs.

Spanning trees are produced by an include-first/exclude-second depth-first
search over the edges in sorted order, which yields them in lexicographic
order of their sorted edge lists.  The even-tree search runs the same
traversal with extra pruning that never discards a branch still holding a
spanning even tree, so its first hit is the lexicographically first even
spanning tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Sequence

import numpy as np

from .errors import ContractViolation, EnumerationCapExceeded
from .graph import B, Color, Edge, EvenTree, Graph, W, admissible_coloring, is_connected

DEFAULT_CAP = 10**7


class _RollbackUF:
    """Union-find with parity and undo; union by size, no path compression."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n
        self.par = [0] * n  # parity to parent
        # parity (relative to the root) shared by every known leaf of the component, or -1
        self.leaf_par = [-1] * n
        self.trail: list[tuple] = []

    def find(self, x: int) -> tuple[int, int]:
        p = 0
        while self.parent[x] != x:
            p ^= self.par[x]
            x = self.parent[x]
        return x, p

    def union(self, u: int, v: int) -> bool:
        """Join the components of an edge u-v; returns False on a leaf-parity clash."""
        ru, pu = self.find(u)
        rv, pv = self.find(v)
        if self.size[ru] < self.size[rv]:
            ru, rv, pu, pv = rv, ru, pv, pu
        link = pu ^ pv ^ 1
        self.trail.append(("union", rv, ru, self.leaf_par[ru]))
        self.parent[rv] = ru
        self.par[rv] = link
        self.size[ru] += self.size[rv]
        if self.leaf_par[rv] != -1:
            moved = self.leaf_par[rv] ^ link
            if self.leaf_par[ru] == -1:
                self.leaf_par[ru] = moved
            elif self.leaf_par[ru] != moved:
                return False
        return True

    def mark_leaf(self, x: int) -> bool:
        r, p = self.find(x)
        if self.leaf_par[r] == -1:
            self.trail.append(("leaf", r, -1))
            self.leaf_par[r] = p
            return True
        return self.leaf_par[r] == p

    def mark(self) -> int:
        return len(self.trail)

    def rollback(self, mark: int) -> None:
        while len(self.trail) > mark:
            entry = self.trail.pop()
            if entry[0] == "union":
                _, rv, ru, old_leaf = entry
                self.parent[rv] = rv
                self.par[rv] = 0
                self.size[ru] -= self.size[rv]
                self.leaf_par[ru] = old_leaf
            else:
                _, r, old = entry
                self.leaf_par[r] = old


def _spans_with(n: int, fixed: list[Edge], rest: Sequence[Edge]) -> bool:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in list(fixed) + list(rest):
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
            comps -= 1
            if comps == 1:
                return True
    return comps <= 1


def _search(g: Graph, cap: int, even_only: bool) -> Iterator[tuple[Edge, ...]]:
    n = g.n
    if not is_connected(g):
        raise ContractViolation("spanning tree enumeration needs a connected graph")
    if n <= 1:
        yield ()
        return
    edges = g.sorted_edges
    m = len(edges)
    need = n - 1
    uf = _RollbackUF(n)
    deg_in = [0] * n
    deg_rem = [g.degree(v) for v in range(n)]
    chosen: list[Edge] = []
    count = 0

    if even_only:
        for v in range(n):
            if deg_rem[v] == 1:
                uf.mark_leaf(v)

    # Even search only: frontier states whose subtree held no even tree.
    dead: set[tuple] = set()
    hits = 0

    def frontier_key(k: int) -> tuple | None:
        """Everything the rest of the search depends on, or None when no
        completion is possible.  Only vertices with undecided edges matter;
        per vertex: component, parity inside it, included degree capped at 2."""
        anchors: dict[int, tuple[int, int]] = {}
        verts = []
        for x in range(n):
            if deg_rem[x] == 0:
                continue
            r, p = uf.find(x)
            if r not in anchors:
                anchors[r] = (len(anchors), p)
            idx, p0 = anchors[r]
            verts.append((x, idx, p ^ p0, min(deg_in[x], 2)))
        if n - len(chosen) != len(anchors):
            return None  # some component can no longer grow
        leaf = tuple(
            -1 if uf.leaf_par[r] == -1 else uf.leaf_par[r] ^ p0
            for r, (_, p0) in anchors.items()
        )
        return (k, tuple(verts), leaf)

    def rec(k: int) -> Iterator[tuple[Edge, ...]]:
        nonlocal count, hits
        if len(chosen) == need:
            count += 1
            if count > cap:
                raise EnumerationCapExceeded(cap)
            hits += 1
            yield tuple(chosen)
            return
        if k == m or len(chosen) + (m - k) < need:
            return
        key = None
        if even_only:
            key = frontier_key(k)
            if key is None or key in dead:
                return
        before = hits
        u, v = edges[k]
        deg_rem[u] -= 1
        deg_rem[v] -= 1

        # include
        ru, _ = uf.find(u)
        rv, _ = uf.find(v)
        if ru != rv:
            mark = uf.mark()
            if uf.union(u, v):
                deg_in[u] += 1
                deg_in[v] += 1
                chosen.append((u, v))
                yield from rec(k + 1)
                chosen.pop()
                deg_in[u] -= 1
                deg_in[v] -= 1
            uf.rollback(mark)

        # exclude
        ok = True
        if ru != rv and not _spans_with(n, chosen, edges[k + 1:]):
            ok = False
        mark = uf.mark()
        if ok and even_only:
            for x in (u, v):
                if deg_in[x] + deg_rem[x] == 1 and not uf.mark_leaf(x):
                    ok = False
                    break
        if ok:
            yield from rec(k + 1)
        uf.rollback(mark)

        deg_rem[u] += 1
        deg_rem[v] += 1
        if key is not None and hits == before:
            dead.add(key)

    yield from rec(0)


def enumerate_spanning_trees(g: Graph, cap: int = DEFAULT_CAP) -> Iterator[tuple[Edge, ...]]:
    """Every spanning tree of connected ``g`` once, as a sorted edge tuple, in
    lexicographic order.  Raises EnumerationCapExceeded past ``cap`` trees."""
    return _search(g, cap, even_only=False)


def even_spanning_trees(g: Graph, cap: int = DEFAULT_CAP) -> Iterator[EvenTree]:
    """Every spanning even tree of ``g``, in the order of :func:`enumerate_spanning_trees`.

    ``cap`` bounds the number of complete spanning trees examined.
    """
    for t in _search(g, cap, even_only=True):
        coloring = admissible_coloring(Graph(g.n, frozenset(t)))
        if coloring is not None:
            yield EvenTree(frozenset(t), tuple(coloring))


def oracle_even_spanning_tree(g: Graph, cap: int = DEFAULT_CAP) -> EvenTree | None:
    return next(even_spanning_trees(g, cap), None)


def kirchhoff_count(g: Graph) -> int:
    """Number of spanning trees by the matrix-tree theorem."""
    if g.n <= 1:
        return 1
    lap = np.zeros((g.n, g.n))
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1
        lap[u, u] += 1
        lap[v, v] += 1
    return int(round(np.linalg.det(lap[1:, 1:])))


# ---------------------------------------------------------------------------
# gadget patterns


class PatternKind(str, Enum):
    CONNECTOR = "connector"
    DISCONNECTOR = "disconnector"


@dataclass(frozen=True)
class PatternRequirement:
    boundary: tuple[int, ...]
    kind: PatternKind
    colors: dict[int, Color] = field(hash=False)

    def __post_init__(self) -> None:
        if len(set(self.boundary)) != len(self.boundary):
            raise ValueError("boundary vertices must be distinct")
        if set(self.colors) != set(self.boundary):
            raise ValueError("exactly the boundary vertices need a required color")
        if self.kind is PatternKind.DISCONNECTOR and len(self.boundary) != 2:
            raise ValueError("a disconnector separates exactly two boundary vertices")


@dataclass(frozen=True)
class PatternWitness:
    edges: tuple[Edge, ...]
    coloring: tuple[Color, ...]


def _forests(g: Graph, k: int, separate: tuple[int, int] | None) -> Iterator[tuple[Edge, ...]]:
    """Spanning forests of ``g`` with exactly ``k`` components, lexicographic
    order; with ``separate`` the two given vertices end in different trees."""
    n = g.n
    need = n - k
    edges = g.sorted_edges
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[Edge] = []

    def rec(i: int) -> Iterator[tuple[Edge, ...]]:
        if len(chosen) == need:
            yield tuple(chosen)
            return
        if len(chosen) + (len(edges) - i) < need:
            return
        u, v = edges[i]
        a, b = find(u), find(v)
        if a != b:
            if separate is None or {find(separate[0]), find(separate[1])} != {a, b}:
                parent[a] = b
                chosen.append((u, v))
                yield from rec(i + 1)
                chosen.pop()
                parent[a] = a
        yield from rec(i + 1)

    yield from rec(0)


def _forest_colorings(n: int, forest: Sequence[Edge]) -> Iterator[list[Color]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in forest:
        adj[u].append(v)
        adj[v].append(u)
    side = [-1] * n
    comp_of = [-1] * n
    n_comps = 0
    for s in range(n):
        if side[s] != -1:
            continue
        side[s] = 0
        comp_of[s] = n_comps
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    comp_of[y] = n_comps
                    stack.append(y)
        n_comps += 1
    # each bit of the mask flips the anchoring of one component
    for mask in range(1 << n_comps):
        yield [
            (B if (side[v] ^ ((mask >> comp_of[v]) & 1)) == 0 else W)
            for v in range(n)
        ]


def pattern_witness(g: Graph, req: PatternRequirement) -> PatternWitness | None:
    """Lexicographically first forest (and coloring) meeting ``req``, or None."""
    for b in req.boundary:
        if not 0 <= b < g.n:
            raise ValueError(f"boundary vertex {b} not in graph")
    if req.kind is PatternKind.CONNECTOR:
        if not is_connected(g):
            return None
        forests = _forests(g, 1, None)
    else:
        a, b = req.boundary
        forests = _forests(g, 2, (a, b))
    boundary = set(req.boundary)
    for forest in forests:
        deg = [0] * g.n
        for u, v in forest:
            deg[u] += 1
            deg[v] += 1
        for coloring in _forest_colorings(g.n, forest):
            if any(coloring[x] is not c for x, c in req.colors.items()):
                continue
            if any(deg[v] == 1 and coloring[v] is W for v in range(g.n) if v not in boundary):
                continue
            return PatternWitness(tuple(forest), tuple(coloring))
    return None


def check_pattern(g: Graph, req: PatternRequirement) -> bool:
    return pattern_witness(g, req) is not None
