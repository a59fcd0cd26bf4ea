"""Split graphs: clique ``K`` plus maximal independent set ``I``.

``pendant_clique`` below is the set of clique vertices adjacent to a
degree-1 vertex.  When it is all of ``K`` (and ``|K| >= 2``) the answer is
the connectivity of the graph with the clique edges removed; otherwise a
rooted tree always exists.
"""

from __future__ import annotations

from ..errors import ContractViolation, IntegrityError
from ..graph import Edge, Graph, bfs_tree, components, even_tree, is_connected, norm_edge
from ..recognize import SplitPartition, split_partition
from .outcome import DisconnectedAux, Found, NoTree, NotInClass, SmallException, SolveOutcome


def pendant_clique(g: Graph, part: SplitPartition) -> set[int]:
    pendants = {v for v in part.independent if g.degree(v) == 1}
    return g.neighborhood(pendants)


def clique_free_graph(g: Graph, clique: frozenset[int] | set[int]) -> Graph:
    """``g`` without the edges inside ``clique``."""
    return Graph(g.n, frozenset(e for e in g.edges if not (e[0] in clique and e[1] in clique)))


def greedy_maximal_matching(edges: list[Edge]) -> list[Edge]:
    used: set[int] = set()
    out = []
    for u, v in sorted(edges):
        if u not in used and v not in used:
            used.update((u, v))
            out.append((u, v))
    return out


def _rooted_tree(g: Graph, K: set[int], I: set[int], k1: set[int]) -> list[Edge]:
    r = min(K - k1)
    i2 = {v for v in g.adj[r] & I if g.degree(v) == 2}
    k_prime = (k1 | g.neighborhood(i2)) - {r}
    i_prime = g.neighborhood(k_prime) & I
    k_tilde = K - k_prime - {r}
    i_tilde = I - i_prime

    edges: list[Edge] = []
    placed: set[int] = set()
    for u in sorted(k_prime):
        edges.append(norm_edge(r, u))
        leaf = min(
            (v for v in g.adj[u] & i_prime if g.adj[v] in ({u}, {u, r})),
            default=None,
        )
        if leaf is None:
            raise IntegrityError(f"clique vertex {u} has no private independent neighbor")
        edges.append(norm_edge(u, leaf))
        placed.add(leaf)
    for v in sorted(i_prime - placed):
        edges.append(norm_edge(v, min(g.adj[v] & k_prime)))

    if not k_tilde:
        if i_tilde:
            raise IntegrityError("independent vertices left without clique partners")
        return edges
    if not i_tilde:
        if k_prime:
            hub = min(k_prime)
            edges += [norm_edge(hub, x) for x in sorted(k_tilde)]
        else:
            hub = min(k_tilde)
            edges.append(norm_edge(r, hub))
            edges += [norm_edge(hub, x) for x in sorted(k_tilde - {hub})]
        return edges

    cross = [norm_edge(u, v) for u in k_tilde for v in g.adj[u] & i_tilde]
    matching = greedy_maximal_matching(cross)
    if not matching:
        raise IntegrityError("empty matching between leftover clique and independent vertices")
    matched_k: set[int] = set()
    matched_all: set[int] = set()
    for a, b in matching:
        u, v = (a, b) if a in k_tilde else (b, a)
        edges.append(norm_edge(r, u))
        edges.append(norm_edge(u, v))
        matched_k.add(u)
        matched_all.update((u, v))
    for x in sorted((k_tilde | i_tilde) - matched_all):
        hub = min(g.adj[x] & matched_k) if x in i_tilde else min(matched_k)
        edges.append(norm_edge(hub, x))
    return edges


def solve_split(g: Graph) -> SolveOutcome:
    if not is_connected(g):
        raise ContractViolation("solve_split expects a connected graph")
    part = split_partition(g)
    if part is None:
        return NotInClass("not a split graph")
    K, I = set(part.clique), set(part.independent)
    if len(K) <= 1:
        if g.n == 2:
            return NoTree(SmallException("K2"))
        if not K:
            return Found(even_tree(g, []))
        (c,) = K
        return Found(even_tree(g, [norm_edge(c, x) for x in sorted(I)]))
    k1 = pendant_clique(g, part)
    if k1 == K:
        aux = clique_free_graph(g, K)
        comps = components(aux)
        if len(comps) > 1:
            return NoTree(DisconnectedAux(
                "split", tuple(tuple(c) for c in comps), clique=tuple(sorted(K)),
            ))
        return Found(even_tree(g, bfs_tree(aux, 0)))
    return Found(even_tree(g, _rooted_tree(g, K, I, k1)))
