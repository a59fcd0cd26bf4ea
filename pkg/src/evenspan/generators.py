"""Named graphs and seeded random members of each supported class.

Every random generator takes a ``random.Random`` so callers control the
seed; returned graphs are connected and randomly relabeled.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Iterator

from .graph import Edge, Graph, norm_edge
from .reduction.cnf import Cnf


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return complete_bipartite(1, leaves)


def paw() -> Graph:
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def net() -> Graph:
    """Triangle with a pendant vertex on each corner."""
    return Graph.from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def bowtie() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


NAMED: dict[str, Callable[[], Graph]] = {
    "paw": paw,
    "net": net,
    "bowtie": bowtie,
    "petersen": petersen,
}


# ---------------------------------------------------------------------------
# random class members


def relabel_randomly(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def _finish(n: int, edges: set[Edge], rng: random.Random) -> Graph:
    return relabel_randomly(Graph(n, frozenset(edges)), rng)


def random_connected(n: int, rng: random.Random, p: float | None = None) -> Graph:
    """Random spanning tree (random attachment) plus each other pair with probability ``p``."""
    p = rng.random() if p is None else p
    edges = {norm_edge(v, rng.randrange(v)) for v in range(1, n)}
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return _finish(n, edges, rng)


def random_cograph(n: int, rng: random.Random) -> Graph:
    """Random cotree whose root is a join, so the result is connected."""
    edges: set[Edge] = set()

    def build(vs: list[int], join: bool) -> None:
        if len(vs) == 1:
            return
        k = rng.randint(2, min(len(vs), 4))
        cuts = sorted(rng.sample(range(1, len(vs)), k - 1))
        parts = [vs[a:b] for a, b in zip([0, *cuts], [*cuts, len(vs)])]
        if join:
            for pa, pb in itertools.combinations(parts, 2):
                edges.update(norm_edge(u, v) for u in pa for v in pb)
        for part in parts:
            build(part, not join)

    if n > 1:
        build(list(range(n)), True)
    return _finish(n, edges, rng)


def random_cobipartite(n: int, rng: random.Random) -> Graph:
    if n < 2:
        raise ValueError("cobipartite graphs need two vertices")
    a = rng.randint(1, n - 1)
    v1, v2 = range(a), range(a, n)
    edges = {e for side in (v1, v2) for e in itertools.combinations(side, 2)}
    p = rng.random()
    cross = [(u, v) for u in v1 for v in v2]
    edges.update(e for e in cross if rng.random() < p)
    edges.add(rng.choice(cross))
    return _finish(n, edges, rng)


def random_unit_interval(n: int, rng: random.Random) -> Graph:
    """Unit intervals with left ends spaced by gaps below 1 (so connected)."""
    scale = rng.uniform(0.1, 1.0)
    xs = [0.0]
    for _ in range(n - 1):
        xs.append(xs[-1] + rng.random() * scale)
    edges = {(u, v) for u, v in itertools.combinations(range(n), 2) if xs[v] - xs[u] <= 1.0}
    return _finish(n, edges, rng)


def random_split(n: int, rng: random.Random) -> Graph:
    k = rng.randint(1, n)
    edges = set(itertools.combinations(range(k), 2))
    p = rng.random()
    for x in range(k, n):
        nbrs = [c for c in range(k) if rng.random() < p] or [rng.randrange(k)]
        edges.update((c, x) for c in nbrs)
    return _finish(n, edges, rng)


def random_block(n: int, rng: random.Random) -> Graph:
    """Glue cliques of random size onto random existing vertices."""
    edges: set[Edge] = set()
    size = 1
    while size < n:
        s = rng.randint(1, min(4, n - size))
        anchor = rng.randrange(size)
        block = [anchor, *range(size, size + s)]
        edges.update(norm_edge(u, v) for u, v in itertools.combinations(block, 2))
        size += s
    return _finish(n, edges, rng)


RANDOM_CLASS: dict[str, Callable[[int, random.Random], Graph]] = {
    "cograph": random_cograph,
    "cobipartite": random_cobipartite,
    "unit-interval": random_unit_interval,
    "split": random_split,
    "block": random_block,
}


def random_cnf(num_vars: int, num_clauses: int, rng: random.Random, max_width: int = 3) -> Cnf:
    clauses = []
    for _ in range(num_clauses):
        width = rng.randint(1, min(max_width, num_vars))
        vs = sorted(rng.sample(range(1, num_vars + 1), width))
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return Cnf(num_vars, tuple(clauses))


# ---------------------------------------------------------------------------
# exhaustive small graphs


def connected_graphs_atlas(max_n: int = 7) -> Iterator[Graph]:
    """All connected graphs on 1..max_n vertices up to isomorphism (max_n <= 7)."""
    import networkx as nx

    if max_n > 7:
        raise ValueError("the graph atlas stops at seven vertices")
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n and nx.is_connected(h):
            yield from_networkx(h)


def from_networkx(h) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges])


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def labeled_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on n vertices, via Pruefer sequences."""
    if n == 1:
        yield Graph(1, frozenset())
        return
    if n == 2:
        yield Graph.from_edges(2, [(0, 1)])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield _from_pruefer(list(seq), n)


def _from_pruefer(seq: list[int], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return Graph.from_edges(n, edges)
