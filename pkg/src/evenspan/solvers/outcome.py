"""Solver results and independently checkable no-tree certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..graph import Color, EvenTree, Graph, components, is_connected, two_coloring


@dataclass(frozen=True)
class BalancedBipartite:
    """``g`` is K_{t,t} with the given sides."""

    t: int
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


@dataclass(frozen=True)
class SmallException:
    name: str  # "K2", "P4" or "C4"


@dataclass(frozen=True)
class OddPath:
    """``g`` is a path with an even number of vertices, listed end to end."""

    path: tuple[int, ...]


@dataclass(frozen=True)
class DisconnectedAux:
    """An auxiliary graph every spanning even tree must live in is disconnected.

    ``kind == "split"``: the auxiliary graph drops the edges inside ``clique``
    (every clique vertex has a pendant neighbor).  ``kind == "block"``: it
    drops edges whose ends got the same forced color; ``forced`` replays the
    forcing in order.
    """

    kind: str
    components: tuple[tuple[int, ...], ...]
    clique: tuple[int, ...] = ()
    forced: tuple[tuple[int, Color], ...] = ()


@dataclass(frozen=True)
class OracleNoTree:
    """Exhaustive search found nothing; checked by searching again."""


Certificate = Union[BalancedBipartite, SmallException, OddPath, DisconnectedAux, OracleNoTree]


@dataclass(frozen=True)
class Found:
    tree: EvenTree


@dataclass(frozen=True)
class NoTree:
    certificate: Certificate


@dataclass(frozen=True)
class NotInClass:
    reason: str = ""


SolveOutcome = Union[Found, NoTree, NotInClass]


# ---------------------------------------------------------------------------
# certificate checking


def _is_balanced_complete_bipartite(g: Graph, cert: BalancedBipartite) -> bool:
    a, b = set(cert.side_a), set(cert.side_b)
    if len(a) != cert.t or len(b) != cert.t or a & b or a | b != set(range(g.n)):
        return False
    if g.m != cert.t * cert.t:
        return False
    return all((u in a) != (v in a) for u, v in g.edges)


def _is_small_exception(g: Graph, name: str) -> bool:
    degs = sorted(g.degree(v) for v in range(g.n))
    if not is_connected(g):
        return False
    if name == "K2":
        return g.n == 2 and g.m == 1
    if name == "P4":
        return g.n == 4 and g.m == 3 and degs == [1, 1, 2, 2]
    if name == "C4":
        return g.n == 4 and g.m == 4 and degs == [2, 2, 2, 2]
    return False


def _is_even_order_path(g: Graph, path: tuple[int, ...]) -> bool:
    if g.n % 2 or sorted(path) != list(range(g.n)) or g.m != g.n - 1:
        return False
    return all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1))


def _check_split_aux(g: Graph, cert: DisconnectedAux) -> bool:
    clique = set(cert.clique)
    rest = set(range(g.n)) - clique
    if len(clique) < 2:
        return False
    if any(not g.has_edge(u, v) for u in clique for v in clique if u < v):
        return False
    if any(g.has_edge(u, v) for u in rest for v in rest if u < v):
        return False
    # every clique vertex must carry a pendant neighbor
    for k in clique:
        if not any(g.degree(x) == 1 for x in g.adj[k] if x in rest):
            return False
    aux = Graph(g.n, frozenset(e for e in g.edges if not (e[0] in clique and e[1] in clique)))
    return _components_match(aux, cert.components)


def _check_block_aux(g: Graph, cert: DisconnectedAux) -> bool:
    from ..recognize import block_cut_tree

    bct = block_cut_tree(g)
    if bct is None or g.n < 3:
        return False
    color: dict[int, Color] = {}
    for v, c in cert.forced:
        if v in color or not 0 <= v < g.n:
            return False
        if g.degree(v) == 1:
            if c is not Color.BLACK:
                return False
        else:
            # some block must have every other vertex already colored c.flip()
            if not any(
                v in blk and all(color.get(x) is c.flip() for x in blk if x != v)
                for blk in bct.blocks
            ):
                return False
        color[v] = c
    aux = Graph(
        g.n,
        frozenset(
            (u, v) for u, v in g.edges
            if not (u in color and v in color and color[u] is color[v])
        ),
    )
    return _components_match(aux, cert.components)


def _components_match(aux: Graph, claimed: tuple[tuple[int, ...], ...]) -> bool:
    comps = components(aux)
    return len(comps) > 1 and [tuple(c) for c in comps] == [tuple(c) for c in claimed]


def check_certificate(g: Graph, cert: Certificate) -> bool:
    """True when ``cert`` really shows ``g`` has no spanning even tree."""
    if isinstance(cert, BalancedBipartite):
        return _is_balanced_complete_bipartite(g, cert)
    if isinstance(cert, SmallException):
        return _is_small_exception(g, cert.name)
    if isinstance(cert, OddPath):
        return _is_even_order_path(g, cert.path)
    if isinstance(cert, DisconnectedAux):
        if cert.kind == "split":
            return _check_split_aux(g, cert)
        if cert.kind == "block":
            return _check_block_aux(g, cert)
    if isinstance(cert, OracleNoTree):
        from ..oracle import oracle_even_spanning_tree

        return oracle_even_spanning_tree(g) is None
    return False


def describe_certificate(cert: Certificate) -> str:
    """Labeled plain-text block for the CLI."""
    if isinstance(cert, BalancedBipartite):
        return (
            f"certificate: BalancedBipartite\n t: {cert.t}\n"
            f" side: {' '.join(map(str, cert.side_a))}\n"
            f" side: {' '.join(map(str, cert.side_b))}\n"
        )
    if isinstance(cert, SmallException):
        return f"certificate: SmallException\n graph: {cert.name}\n"
    if isinstance(cert, OracleNoTree):
        return "certificate: OracleNoTree\n"
    if isinstance(cert, OddPath):
        return f"certificate: OddPath\n path: {' '.join(map(str, cert.path))}\n"
    lines = [f"certificate: DisconnectedAux\n kind: {cert.kind}"]
    if cert.clique:
        lines.append(f" clique: {' '.join(map(str, cert.clique))}")
    if cert.forced:
        lines.append(" forced: " + " ".join(f"{v}={c.value}" for v, c in cert.forced))
    for comp in cert.components:
        lines.append(f" component: {' '.join(map(str, comp))}")
    return "\n".join(lines) + "\n"


def balanced_bipartite_sides(g: Graph) -> BalancedBipartite | None:
    """K_{t,t} recognition by degree sequence and a direct check."""
    if g.n % 2 or g.n == 0:
        return None
    t = g.n // 2
    if any(g.degree(v) != t for v in range(g.n)) or g.m != t * t:
        return None
    side = two_coloring(g)
    if side is None:
        return None
    a = tuple(v for v in range(g.n) if side[v] == 0)
    b = tuple(v for v in range(g.n) if side[v] == 1)
    cert = BalancedBipartite(t, a, b)
    return cert if _is_balanced_complete_bipartite(g, cert) else None


def small_exception(g: Graph) -> SmallException | None:
    for name in ("K2", "P4", "C4"):
        if _is_small_exception(g, name):
            return SmallException(name)
    return None
