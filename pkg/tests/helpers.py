"""Independent reference checks used by the tests.

Nothing here calls into the code under test except the Graph container, so
agreement between these and the package is meaningful.
"""

from __future__ import annotations

import functools
import itertools
from collections import deque
from pathlib import Path

import networkx as nx

from evenspan.generators import connected_graphs_atlas, from_networkx, to_networkx
from evenspan.graph import Graph

DATA = Path(__file__).parent / "data"


# ---------------------------------------------------------------------------
# graph sources


@functools.lru_cache(maxsize=None)
def connected_graphs(max_n: int = 8) -> tuple[Graph, ...]:
    """Every connected graph on 1..max_n vertices, one per isomorphism class."""
    out = list(connected_graphs_atlas(min(max_n, 7)))
    if max_n >= 8:
        out += connected8()
    return tuple(out)


@functools.lru_cache(maxsize=None)
def connected8() -> tuple[Graph, ...]:
    with open(DATA / "connected8.g6", "rb") as fh:
        return tuple(from_networkx(nx.from_graph6_bytes(line.strip())) for line in fh if line.strip())


# ---------------------------------------------------------------------------
# trees


def bfs_dist(n: int, edges, src: int) -> list[int]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = [-1] * n
    dist[src] = 0
    q = deque([src])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def leaves_pairwise_even(n: int, edges) -> bool:
    """All-pairs leaf distance parity on a tree (the definition of even)."""
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    for a in leaves:
        dist = bfs_dist(n, edges, a)
        if any(dist[b] % 2 for b in leaves):
            return False
    return True


def is_spanning_tree(g: Graph, edges) -> bool:
    edges = [tuple(sorted(e)) for e in edges]
    if len(set(edges)) != len(edges) or len(edges) != g.n - 1:
        return False
    if any(not g.has_edge(u, v) for u, v in edges):
        return False
    return g.n == 0 or all(d >= 0 for d in bfs_dist(g.n, edges, 0))


def is_spanning_even_tree(g: Graph, edges) -> bool:
    return is_spanning_tree(g, edges) and leaves_pairwise_even(g.n, edges)


def proper_with_black_leaves(n: int, edges, coloring) -> bool:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        if coloring[u] == coloring[v]:
            return False
    return all(coloring[v].value == "B" for v in range(n) if deg[v] == 1)


def all_spanning_trees(g: Graph) -> list[frozenset]:
    """Brute force over (n-1)-subsets of edges."""
    if g.n == 1:
        return [frozenset()]
    return [
        frozenset(es)
        for es in itertools.combinations(sorted(g.edges), g.n - 1)
        if is_spanning_tree(g, es)
    ]


def all_even_spanning_trees(g: Graph) -> list[frozenset]:
    return [t for t in all_spanning_trees(g) if leaves_pairwise_even(g.n, t)]


# ---------------------------------------------------------------------------
# class membership straight from the definitions


def _clique(g: Graph, vs) -> bool:
    return all(g.has_edge(a, b) for a, b in itertools.combinations(vs, 2))


def _independent(g: Graph, vs) -> bool:
    return not any(g.has_edge(a, b) for a, b in itertools.combinations(vs, 2))


def _bipartitions(n: int):
    for mask in range(1 << n):
        yield [v for v in range(n) if mask >> v & 1], [v for v in range(n) if not mask >> v & 1]


def is_split(g: Graph) -> bool:
    return any(_clique(g, k) and _independent(g, i) for k, i in _bipartitions(g.n))


def is_split_degrees(g: Graph) -> bool:
    """Degree-sequence test: with degrees sorted descending and k the largest
    index where d_k >= k - 1, the top k degrees sum to k(k-1) plus the rest."""
    d = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    k = max((i + 1 for i in range(g.n) if d[i] >= i), default=0)
    return sum(d[:k]) == k * (k - 1) + sum(d[k:])


def is_cobipartite(g: Graph) -> bool:
    return g.n >= 2 and nx.is_bipartite(nx.complement(to_networkx(g)))


def is_cograph(g: Graph) -> bool:
    """No induced P4."""
    for a, b, c, d in itertools.permutations(range(g.n), 4):
        if a < d and g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d):
            if not (g.has_edge(a, c) or g.has_edge(b, d) or g.has_edge(a, d)):
                return False
    return True


def umbrella_free(g: Graph, order) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for u, w in g.edges:
        i, k = sorted((pos[u], pos[w]))
        for j in range(i + 1, k):
            if not (g.has_edge(order[i], order[j]) and g.has_edge(order[j], order[k])):
                return False
    return True


def is_unit_interval(g: Graph) -> bool:
    """Some vertex order is umbrella-free (backtracking over prefixes).
    Exponential; use on n <= 7."""

    def extend(order: list[int], rest: set[int]) -> bool:
        if not rest:
            return True
        for x in sorted(rest):
            ok = True
            for i, a in enumerate(order):
                if g.has_edge(a, x) and not all(
                    g.has_edge(a, b) and g.has_edge(b, x) for b in order[i + 1:]
                ):
                    ok = False
                    break
            if ok and extend(order + [x], rest - {x}):
                return True
        return False

    return extend([], set(range(g.n)))


_CLAW = nx.star_graph(3)
_NET = nx.Graph([(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
_TENT = nx.Graph([(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)])


def is_unit_interval_forbidden(g: Graph) -> bool:
    """Chordal with no induced claw, net or tent."""
    h = to_networkx(g)
    if not nx.is_chordal(h):
        return False
    return not any(
        nx.algorithms.isomorphism.GraphMatcher(h, f).subgraph_is_isomorphic()
        for f in (_CLAW, _NET, _TENT)
    )


def is_block_graph(g: Graph) -> bool:
    h = to_networkx(g)
    return nx.is_connected(h) and all(_clique(g, c) for c in nx.biconnected_components(h))


MEMBERSHIP = {
    "cograph": is_cograph,
    "cobipartite": is_cobipartite,
    "unit-interval": is_unit_interval_forbidden,
    "split": is_split_degrees,
    "block": is_block_graph,
}


# ---------------------------------------------------------------------------
# named shapes, via general isomorphism (the package uses degree sequences)


def isomorphic(g: Graph, h: nx.Graph) -> bool:
    return nx.is_isomorphic(to_networkx(g), h)


def is_balanced_complete_bipartite(g: Graph) -> bool:
    return g.n >= 2 and g.n % 2 == 0 and isomorphic(g, nx.complete_bipartite_graph(g.n // 2, g.n // 2))


def is_small_exception(g: Graph) -> bool:
    return g.n in (2, 4) and any(
        isomorphic(g, h) for h in (nx.complete_graph(2), nx.path_graph(4), nx.cycle_graph(4))
    )


def is_even_order_path(g: Graph) -> bool:
    return g.n % 2 == 0 and g.n >= 2 and isomorphic(g, nx.path_graph(g.n))
