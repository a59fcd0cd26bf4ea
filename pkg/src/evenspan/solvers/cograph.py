from __future__ import annotations

from ..errors import ContractViolation, IntegrityError
from ..graph import Edge, Graph, even_tree, is_connected, norm_edge
from ..recognize import cograph_join_decompose
from .outcome import Found, NoTree, NotInClass, SolveOutcome, balanced_bipartite_sides


def _bipartite_join_tree(small: list[int], large: list[int]) -> list[Edge]:
    """Spanning tree of the complete bipartite graph between ``small`` and
    ``large`` (|small| < |large|) whose leaves all lie in ``large``.

    A single vertex on the small side gives the star; otherwise root ``r``
    in ``large`` takes every small vertex, each small vertex is matched to a
    private partner in ``large - r``, and leftover ``large`` vertices hang off
    the first small vertex.
    """
    small, large = sorted(small), sorted(large)
    assert len(small) < len(large)
    if len(small) == 1:
        c = small[0]
        return [norm_edge(c, x) for x in large]
    r, others = large[0], large[1:]
    edges = [norm_edge(r, s) for s in small]
    edges += [norm_edge(s, x) for s, x in zip(small, others)]
    edges += [norm_edge(small[0], x) for x in others[len(small):]]
    return edges


def _cograph_tree(g: Graph, v1: set[int], v2: set[int]) -> list[Edge]:
    """Spanning even tree of a cograph given as the join of ``v1`` and ``v2``."""
    if len(v1) != len(v2):
        small, large = (v1, v2) if len(v1) < len(v2) else (v2, v1)
        return _bipartite_join_tree(list(small), list(large))
    inner = sorted(
        e for e in g.edges
        if (e[0] in v1 and e[1] in v1) or (e[0] in v2 and e[1] in v2)
    )
    if not inner:
        raise IntegrityError("balanced join without inner edges is K_{t,t}")
    keep, drop = inner[0]
    side = v1 if keep in v1 else v2
    other = v2 if side is v1 else v1
    # side - {drop} is now the strictly smaller side of a join of g - drop
    edges = _bipartite_join_tree(sorted(side - {drop}), sorted(other))
    return edges + [norm_edge(keep, drop)]


def solve_cograph(g: Graph) -> SolveOutcome:
    if not is_connected(g):
        raise ContractViolation("solve_cograph expects a connected graph")
    if g.n == 1:
        return Found(even_tree(g, []))
    split = cograph_join_decompose(g)
    if split is None:
        return NotInClass("not a cograph")
    cert = balanced_bipartite_sides(g)
    if cert is not None:
        return NoTree(cert)
    return Found(even_tree(g, _cograph_tree(g, set(split.v1), set(split.v2))))
