"""Block graphs: force colors through the cliques, then fill in top-down.

Steps, in order: degree-1 vertices are black; a clique with a single
uncolored vertex whose other members agree gets the opposite color (to a
fixpoint); edges joining equal colors are dropped and a disconnection means
no tree; remaining uncolored vertices are settled clique by clique in
preorder of the block-cut tree; any spanning tree of the bichromatic edges
is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ContractViolation, IntegrityError
from ..graph import B, Color, Edge, Graph, W, bfs_tree, components, even_tree, is_connected
from ..recognize import BlockCutTree, block_cut_tree
from .outcome import DisconnectedAux, Found, NoTree, NotInClass, SmallException, SolveOutcome


@dataclass(frozen=True)
class BlockTrace:
    """Intermediate state of the block algorithm, exposed for testing.

    ``forced`` is the partial coloring after the forcing phase (in the order
    vertices were colored), ``forced_graph`` the graph with monochromatic
    forced edges removed; ``final`` and ``final_graph`` are the same after
    the top-down phase (None when the algorithm stopped early).
    """

    bct: BlockCutTree
    forced: tuple[tuple[int, Color], ...]
    forced_graph: Graph
    final: tuple[Color, ...] | None
    final_graph: Graph | None


def _drop_monochromatic(g: Graph, color: dict[int, Color]) -> Graph:
    return Graph(
        g.n,
        frozenset(
            (u, v) for u, v in g.edges
            if not (u in color and v in color and color[u] is color[v])
        ),
    )


def block_trace(g: Graph) -> BlockTrace | None:
    """Run the algorithm on a connected block graph with n >= 3; None if not a block graph."""
    if not is_connected(g):
        raise ContractViolation("block algorithm expects a connected graph")
    bct = block_cut_tree(g)
    if bct is None:
        return None
    if g.n < 3:
        raise ContractViolation("block algorithm needs at least three vertices")

    order: list[tuple[int, Color]] = []
    color: dict[int, Color] = {}
    for v in range(g.n):
        if g.degree(v) == 1:
            color[v] = B
            order.append((v, B))

    changed = True
    while changed:
        changed = False
        for blk in bct.blocks:
            open_ = [x for x in blk if x not in color]
            if len(open_) != 1:
                continue
            seen = {color[x] for x in blk if x in color}
            if len(seen) == 1:
                (c,) = seen
                v = open_[0]
                color[v] = c.flip()
                order.append((v, c.flip()))
                changed = True

    forced_graph = _drop_monochromatic(g, color)
    if len(components(forced_graph)) > 1:
        return BlockTrace(bct, tuple(order), forced_graph, None, None)

    for bi in bct.block_preorder():
        blk = bct.blocks[bi]
        open_ = sorted(x for x in blk if x not in color)
        if not open_:
            continue
        if not any(color.get(x) is W for x in blk):
            color[open_[0]] = W
            open_ = open_[1:]
        for x in open_:
            color[x] = B

    final_graph = _drop_monochromatic(forced_graph, color)
    final = tuple(color[v] for v in range(g.n))
    return BlockTrace(bct, tuple(order), forced_graph, final, final_graph)


def solve_block(g: Graph) -> SolveOutcome:
    if not is_connected(g):
        raise ContractViolation("solve_block expects a connected graph")
    if block_cut_tree(g) is None:
        return NotInClass("some biconnected component is not a clique")
    if g.n == 1:
        return Found(even_tree(g, []))
    if g.n == 2:
        return NoTree(SmallException("K2"))
    trace = block_trace(g)
    assert trace is not None
    if trace.final_graph is None:
        comps = components(trace.forced_graph)
        return NoTree(DisconnectedAux("block", tuple(tuple(c) for c in comps), forced=trace.forced))
    if not is_connected(trace.final_graph):
        raise IntegrityError("bichromatic subgraph disconnected after the top-down phase")
    edges: list[Edge] = bfs_tree(trace.final_graph, 0)
    tree = even_tree(g, edges)
    if tree.coloring != trace.final:
        raise IntegrityError("tree coloring disagrees with the computed coloring")
    return Found(tree)
