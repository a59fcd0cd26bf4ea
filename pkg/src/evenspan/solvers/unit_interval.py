from __future__ import annotations

from ..errors import ContractViolation, IntegrityError
from ..graph import Graph, even_tree, is_connected, norm_edge
from ..recognize import unit_interval_order
from .outcome import Found, NoTree, NotInClass, OddPath, SolveOutcome


def _path_edges(g: Graph, order: list[int]) -> list[tuple[int, int]]:
    for a, b in zip(order, order[1:]):
        if not g.has_edge(a, b):
            raise IntegrityError("consecutive vertices of the ordering are not adjacent")
    return [norm_edge(a, b) for a, b in zip(order, order[1:])]


def solve_unit_interval(g: Graph) -> SolveOutcome:
    if not is_connected(g):
        raise ContractViolation("solve_unit_interval expects a connected graph")
    ui = unit_interval_order(g)
    if ui is None:
        return NotInClass("no umbrella-free ordering")
    order = list(ui.order)
    if g.n % 2 == 1:
        return Found(even_tree(g, _path_edges(g, order)))
    if g.m == g.n - 1 and all(g.degree(v) <= 2 for v in range(g.n)):
        # an umbrella-free order of a path walks it end to end
        _path_edges(g, order)
        return NoTree(OddPath(tuple(order)))

    i = next(
        (i for i in range(g.n - 2) if g.has_edge(order[i], order[i + 2])),
        None,
    )
    if i is None:
        raise IntegrityError("non-path unit interval graph without a consecutive triangle")
    u1, u2, u3 = order[i : i + 3]
    rest = order[:i + 1] + order[i + 2:]
    edges = _path_edges(g, rest)
    # hang u2 on whichever of u1, u3 sits at an odd position of the path
    anchor = u1 if i % 2 == 1 else u3
    return Found(even_tree(g, edges + [norm_edge(anchor, u2)]))
