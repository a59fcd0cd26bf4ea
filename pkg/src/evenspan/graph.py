"""Simple undirected graphs, even-tree colorings and the spanning-even-tree verifier.

Vertices are the dense integers ``0..n-1``.  Edges are stored normalized as
``(u, v)`` with ``u < v``.  Whenever a choice has to be made anywhere in the
package, the smallest id wins.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ContractViolation, ParseError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Color(str, Enum):
    BLACK = "B"
    WHITE = "W"

    def flip(self) -> Color:
        return Color.WHITE if self is Color.BLACK else Color.BLACK

    def __str__(self) -> str:
        return self.value


B = Color.BLACK
W = Color.WHITE

# Per-vertex optional color, indexed by vertex id.
PartialColoring = list  # list[Color | None]


@dataclass(frozen=True)
class Graph:
    """An immutable simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) is not normalized or out of range")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        seen: set[Edge] = set()
        for u, v in edges:
            e = norm_edge(int(u), int(v))
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` in increasing id order."""
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighborhood(self, xs: Iterable[int]) -> set[int]:
        xs = set(xs)
        out: set[int] = set()
        for x in xs:
            out |= self.adj[x]
        return out - xs

    def complement(self) -> Graph:
        es = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if v not in self.adj[u]
        ]
        return Graph(self.n, frozenset(es))

    def spanning_subgraph(self, edges: Iterable[Sequence[int]]) -> Graph:
        """Graph on the same vertex set restricted to ``edges`` (must be edges of self)."""
        es = {norm_edge(u, v) for u, v in edges}
        if not es <= self.edges:
            raise ContractViolation("edge set is not contained in the graph")
        return Graph(self.n, frozenset(es))

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph, relabelled densely.

        Returns the subgraph and the list mapping new ids back to old ids.
        """
        old = sorted(set(vertices))
        new_id = {v: i for i, v in enumerate(old)}
        es = [
            (new_id[u], new_id[v])
            for u, v in self.edges
            if u in new_id and v in new_id
        ]
        return Graph.from_edges(len(old), es), old

    def remove_vertex(self, v: int) -> tuple[Graph, list[int]]:
        return self.induced(x for x in range(self.n) if x != v)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def degree_sequence(self) -> list[int]:
        return sorted((len(a) for a in self.adj), reverse=True)


@dataclass(frozen=True)
class EvenTree:
    """A spanning even tree with its admissible coloring."""

    edges: frozenset[Edge]
    coloring: tuple[Color, ...]

    @property
    def n(self) -> int:
        return len(self.coloring)

    def as_graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def leaves(self) -> list[int]:
        g = self.as_graph()
        return [v for v in range(g.n) if g.degree(v) == 1]


# ---------------------------------------------------------------------------
# connectivity


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest contained id."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def bfs_tree(g: Graph, root: int = 0) -> list[Edge]:
    """Breadth-first spanning tree, scanning neighbors in increasing id order."""
    if g.n == 0:
        return []
    parent = {root: root}
    queue = deque([root])
    out: list[Edge] = []
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in parent:
                parent[w] = u
                out.append(norm_edge(u, w))
                queue.append(w)
    if len(parent) != g.n:
        raise ContractViolation("graph is disconnected")
    return sorted(out)


def two_coloring(g: Graph) -> list[int] | None:
    """Proper 2-coloring as 0/1 labels (each component anchored at 0 on its
    smallest vertex), or None if ``g`` is not bipartite."""
    side: list[int | None] = [None] * g.n
    for s in range(g.n):
        if side[s] is not None:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if side[w] is None:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return side  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# even trees


def admissible_coloring(tree: Graph) -> list[Color] | None:
    """The proper black/white coloring with every leaf black, if ``tree`` is even.

    A one-vertex tree counts as even and its vertex is black.  Raises
    :class:`ContractViolation` when ``tree`` is not a tree.
    """
    if not is_tree(tree):
        raise ContractViolation("admissible_coloring expects a tree")
    side = two_coloring(tree)
    assert side is not None
    leaves = [v for v in range(tree.n) if tree.degree(v) == 1]
    if not leaves:
        return [B]
    black_side = side[leaves[0]]
    if any(side[v] != black_side for v in leaves):
        return None
    return [B if side[v] == black_side else W for v in range(tree.n)]


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of :func:`verify_even_spanning_tree`.

    ``checks`` lists ``(name, passed)`` pairs in the order they were
    evaluated; evaluation stops at the first failure.
    """

    ok: bool
    checks: tuple[tuple[str, bool], ...]
    reason: str | None = None
    coloring: tuple[Color, ...] | None = None

    @property
    def failed_check(self) -> str | None:
        for name, passed in self.checks:
            if not passed:
                return name
        return None


def verify_even_spanning_tree(g: Graph, t: Iterable[Sequence[int]]) -> VerifyReport:
    """Check that the edge set ``t`` is a spanning even tree of ``g``."""
    checks: list[tuple[str, bool]] = []

    def fail(name: str, reason: str) -> VerifyReport:
        checks.append((name, False))
        return VerifyReport(False, tuple(checks), reason)

    edges: set[Edge] = set()
    for e in t:
        u, v = e
        if u == v or not (0 <= u < g.n and 0 <= v < g.n):
            return fail("edges-in-graph", f"({u}, {v}) is not an edge of the graph")
        ne = norm_edge(u, v)
        if ne not in g.edges:
            return fail("edges-in-graph", f"({u}, {v}) is not an edge of the graph")
        if ne in edges:
            return fail("edges-in-graph", f"edge ({u}, {v}) listed twice")
        edges.add(ne)
    checks.append(("edges-in-graph", True))

    if len(edges) != g.n - 1:
        return fail("edge-count", f"expected {g.n - 1} edges, got {len(edges)}")
    checks.append(("edge-count", True))

    tree = Graph(g.n, frozenset(edges))
    if not is_connected(tree):
        return fail("connected-acyclic", "edge set does not span the graph (it has a cycle)")
    checks.append(("connected-acyclic", True))

    coloring = admissible_coloring(tree)
    if coloring is None:
        return fail("even", "some pair of leaves is at odd distance")
    checks.append(("even", True))
    return VerifyReport(True, tuple(checks), None, tuple(coloring))


def even_tree(g: Graph, t: Iterable[Sequence[int]]) -> EvenTree:
    """Wrap ``t`` as an :class:`EvenTree`; raises ContractViolation if it is not one."""
    t = [norm_edge(u, v) for u, v in t]
    report = verify_even_spanning_tree(g, t)
    if not report.ok:
        raise ContractViolation(f"not a spanning even tree: {report.reason}")
    assert report.coloring is not None
    return EvenTree(frozenset(t), report.coloring)


# ---------------------------------------------------------------------------
# text formats


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        out.append((lineno, s.split()))
    return out


def _parse_int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def _parse_edges(lines: list[tuple[int, list[str]]]) -> tuple[Graph, list[tuple[int, list[str]]]]:
    if not lines:
        raise ParseError("missing header line 'n m'", 1)
    lineno, head = lines[0]
    if len(head) != 2:
        raise ParseError("header must be 'n m'", lineno)
    n, m = (_parse_int(tok, lineno) for tok in head)
    if n < 0 or m < 0:
        raise ParseError("negative vertex or edge count", lineno)
    body = lines[1:]
    if len(body) < m:
        last = body[-1][0] if body else lineno
        raise ParseError(f"header announces {m} edges but only {len(body)} follow", last)
    seen: set[Edge] = set()
    for lineno, toks in body[:m]:
        if len(toks) != 2:
            raise ParseError("edge line must be 'u v'", lineno)
        u, v = (_parse_int(tok, lineno) for tok in toks)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range [0, {n})", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        e = norm_edge(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add(e)
    return Graph(n, frozenset(seen)), body[m:]


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` + edge-lines format."""
    g, rest = _parse_edges(_content_lines(text))
    if rest:
        raise ParseError("more edge lines than the header announces", rest[0][0])
    return g


def parse_tree(text: str) -> tuple[Graph, list[Color] | None]:
    """Parse a tree file: the graph format, optionally followed by ``colors:``
    and one B/W token per vertex.  The edge set is not checked to be a tree."""
    g, rest = _parse_edges(_content_lines(text))
    if not rest:
        return g, None
    lineno, toks = rest[0]
    if toks[0] != "colors:":
        raise ParseError("expected 'colors:'", lineno)
    tokens = toks[1:] + [tok for _, more in rest[1:] for tok in more]
    if len(tokens) != g.n:
        raise ParseError(f"expected {g.n} color tokens, got {len(tokens)}", lineno)
    try:
        colors = [Color(tok) for tok in tokens]
    except ValueError:
        raise ParseError("color tokens must be B or W", lineno) from None
    return g, colors


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"{g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def format_tree(tree: EvenTree, comment: str | None = None) -> str:
    text = format_graph(tree.as_graph(), comment)
    return text + "colors:\n" + " ".join(c.value for c in tree.coloring) + "\n"


def to_dot(g: Graph, highlight: Iterable[Sequence[int]] = (), labels: dict[int, str] | None = None,
           colors: Sequence[Color] | None = None) -> str:
    """Graphviz rendering; highlighted edges are drawn bold, others dashed grey."""
    hl = {norm_edge(u, v) for u, v in highlight}
    out = ["graph G {"]
    for v in range(g.n):
        attrs = []
        if labels and v in labels:
            attrs.append(f'label="{v}\\n{labels[v]}"')
        if colors is not None:
            fill = "black" if colors[v] is B else "white"
            font = "white" if colors[v] is B else "black"
            attrs.append(f'style=filled fillcolor={fill} fontcolor={font}')
        out.append(f"  {v}" + (f" [{' '.join(attrs)}]" if attrs else "") + ";")
    for u, v in g.sorted_edges:
        style = "" if not hl else (" [penwidth=2]" if (u, v) in hl else " [style=dashed color=grey]")
        out.append(f"  {u} -- {v}{style};")
    out.append("}")
    return "\n".join(out) + "\n"
