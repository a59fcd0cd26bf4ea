from __future__ import annotations

from ..errors import ContractViolation
from ..graph import Graph, even_tree, is_connected, norm_edge
from ..recognize import cobipartite_partition
from .outcome import Found, NoTree, NotInClass, SolveOutcome, small_exception


def solve_cobipartite(g: Graph) -> SolveOutcome:
    if g.n < 2:
        raise ContractViolation("solve_cobipartite needs at least two vertices")
    if not is_connected(g):
        raise ContractViolation("solve_cobipartite expects a connected graph")
    pair = cobipartite_partition(g)
    if pair is None:
        return NotInClass("complement is not bipartite")
    exc = small_exception(g)
    if exc is not None:
        return NoTree(exc)
    v1, v2 = sorted(pair.v1), sorted(pair.v2)
    if len(v1) > len(v2):
        v1, v2 = v2, v1

    if len(v1) == 1:
        # the lone vertex's neighbor sees everything
        center = min(g.adj[v1[0]])
        edges = [norm_edge(center, x) for x in range(g.n) if x != center]
    elif len(v2) >= 3:
        r = next(x for x in v2 if g.adj[x] & set(v1))
        u = min(g.adj[r] & set(v1))
        v = next(x for x in v2 if x != r)
        edges = [norm_edge(r, u), norm_edge(r, v)]
        edges += [norm_edge(u, x) for x in v1 if x != u]
        edges += [norm_edge(v, x) for x in v2 if x not in (r, v)]
    else:
        center = next(x for x in range(g.n) if g.degree(x) == 3)
        edges = [norm_edge(center, x) for x in g.neighbors(center)]
    return Found(even_tree(g, edges))
