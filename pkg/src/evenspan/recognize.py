"""Graph class recognition with structural witnesses.

None of these are linear time; everything here is at most cubic, which is
plenty for the graph sizes the package is meant for.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ContractViolation
from .graph import Graph, components, is_connected, two_coloring


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset[int]
    independent: frozenset[int]


@dataclass(frozen=True)
class CliquePair:
    v1: frozenset[int]
    v2: frozenset[int]


@dataclass(frozen=True)
class JoinSplit:
    v1: frozenset[int]
    v2: frozenset[int]


@dataclass(frozen=True)
class UIOrdering:
    order: tuple[int, ...]


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks are sorted vertex tuples, ordered lexicographically; ``tree`` maps
    ("B", i) / ("C", v) nodes to their neighbors."""

    blocks: tuple[tuple[int, ...], ...]
    cuts: frozenset[int]
    tree: dict[tuple[str, int], tuple[tuple[str, int], ...]]
    root: int  # index into blocks

    def block_preorder(self) -> list[int]:
        """Block indices in preorder of the tree rooted at ``root``
        (children visited in increasing node order)."""
        out: list[int] = []
        start = ("B", self.root)
        seen = {start}
        stack = [start]
        while stack:
            node = stack.pop()
            if node[0] == "B":
                out.append(node[1])
            children = [c for c in self.tree[node] if c not in seen]
            seen.update(children)
            stack.extend(sorted(children, reverse=True))
        return out


# ---------------------------------------------------------------------------
# split graphs


def split_partition(g: Graph) -> SplitPartition | None:
    """Clique/independent-set partition with a maximal independent side."""
    n = g.n
    if n == 0:
        return SplitPartition(frozenset(), frozenset())
    # Hammer-Simeone degree test; ties broken by smaller id first
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    k = max(i + 1 for i in range(n) if deg[i] >= i)
    if sum(deg[:k]) != k * (k - 1) + sum(deg[k:]):
        return None
    clique = set(order[:k])
    independent = set(order[k:])
    while True:
        lonely = [v for v in clique if not (g.adj[v] & independent)]
        if not lonely:
            break
        v = min(lonely)
        clique.discard(v)
        independent.add(v)
    return SplitPartition(frozenset(clique), frozenset(independent))


# ---------------------------------------------------------------------------
# cobipartite graphs and cographs


def cobipartite_partition(g: Graph) -> CliquePair | None:
    if g.n < 2:
        raise ContractViolation("cobipartite partition needs at least two vertices")
    side = two_coloring(g.complement())
    if side is None:
        return None
    v1 = frozenset(v for v in range(g.n) if side[v] == 0)
    v2 = frozenset(range(g.n)) - v1
    if not v2:
        # complete graph: every complement component is a singleton
        v1, v2 = frozenset({0}), frozenset(range(1, g.n))
    return CliquePair(v1, v2)


def _is_cograph(g: Graph) -> bool:
    if g.n <= 1:
        return True
    comps = components(g)
    if len(comps) == 1:
        comps = components(g.complement())
        if len(comps) == 1:
            return False
    return all(_is_cograph(g.induced(c)[0]) for c in comps)


def cograph_join_decompose(g: Graph) -> JoinSplit | None:
    """Split a connected cograph into two sides joined completely.

    ``v1`` is the complement component holding the smallest vertex.
    """
    if g.n < 2 or not is_connected(g):
        raise ContractViolation("join decomposition needs a connected graph with n >= 2")
    if not _is_cograph(g):
        return None
    comps = components(g.complement())
    v1 = frozenset(comps[0])
    return JoinSplit(v1, frozenset(range(g.n)) - v1)


def is_cograph(g: Graph) -> bool:
    return _is_cograph(g)


# ---------------------------------------------------------------------------
# unit interval graphs


def _lexbfs(g: Graph, prev: Sequence[int] | None = None) -> list[int]:
    """LexBFS; ties go to the smallest id, or with ``prev`` to the vertex
    latest in ``prev`` (the LBFS+ rule)."""
    n = g.n
    rank = {v: i for i, v in enumerate(prev)} if prev is not None else None
    labels: list[list[int]] = [[] for _ in range(n)]
    done = [False] * n
    out: list[int] = []
    for step in range(n):
        best = None
        for v in range(n):
            if done[v]:
                continue
            if best is None or labels[v] > labels[best]:
                best = v
            elif labels[v] == labels[best] and rank is not None and rank[v] > rank[best]:
                best = v
        assert best is not None
        done[best] = True
        out.append(best)
        for w in g.adj[best]:
            if not done[w]:
                labels[w].append(n - step)
    return out


def is_umbrella_free(g: Graph, order: Sequence[int]) -> bool:
    """For positions i < j < k, an edge order[i]-order[k] forces the edges
    order[i]-order[j] and order[j]-order[k]."""
    if sorted(order) != list(range(g.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for u, w in g.edges:
        i, k = sorted((pos[u], pos[w]))
        a, c = order[i], order[k]
        for j in range(i + 1, k):
            b = order[j]
            if not (g.has_edge(a, b) and g.has_edge(b, c)):
                return False
    return True


def unit_interval_order(g: Graph) -> UIOrdering | None:
    """Umbrella-free ordering by three LexBFS sweeps, or None."""
    if g.n == 0:
        return UIOrdering(())
    sweep = _lexbfs(g)
    sweep = _lexbfs(g, sweep)
    sweep = _lexbfs(g, sweep)
    if not is_umbrella_free(g, sweep):
        return None
    return UIOrdering(tuple(sweep))


# ---------------------------------------------------------------------------
# block graphs


def biconnected_components(g: Graph) -> tuple[list[list[int]], set[int]]:
    """Vertex sets of the biconnected components and the cut vertices
    (edge-stack lowpoint traversal).  Isolated vertices form their own block."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[int]] = []
    cuts: set[int] = set()
    timer = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        if not g.adj[s]:
            disc[s] = timer
            timer += 1
            blocks.append([s])
            continue
        disc[s] = low[s] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(s, -1, iter(g.neighbors(s)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == s:
                        root_children += 1
                    stack.append((w, u, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                if parent != s:
                    cuts.add(parent)
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, u):
                        break
                blocks.append(sorted(block))
        if root_children > 1:
            cuts.add(s)
    return blocks, cuts


def block_cut_tree(g: Graph) -> BlockCutTree | None:
    """Block-cut tree of a connected block graph, or None if some block is
    not a clique.  The root is the first block containing vertex 0."""
    if not is_connected(g):
        raise ContractViolation("block-cut tree needs a connected graph")
    if g.n == 0:
        return None
    raw, cuts = biconnected_components(g)
    for blk in raw:
        for i, u in enumerate(blk):
            for v in blk[i + 1:]:
                if not g.has_edge(u, v):
                    return None
    blocks = tuple(sorted(tuple(b) for b in raw))
    tree: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for c in sorted(cuts):
        tree[("C", c)] = []
    for i, blk in enumerate(blocks):
        tree[("B", i)] = []
        for v in blk:
            if v in cuts:
                tree[("B", i)].append(("C", v))
                tree[("C", v)].append(("B", i))
    root = next(i for i, blk in enumerate(blocks) if 0 in blk)
    return BlockCutTree(
        blocks,
        frozenset(cuts),
        {k: tuple(sorted(v)) for k, v in tree.items()},
        root,
    )


# ---------------------------------------------------------------------------

CLASS_LABELS = ("cograph", "cobipartite", "unit-interval", "split", "block")


def recognize(g: Graph) -> dict[str, object]:
    """Class label -> witness for every class ``g`` belongs to."""
    if not is_connected(g):
        raise ContractViolation("recognition expects a connected graph")
    found: dict[str, object] = {}
    if g.n == 1:
        found["cograph"] = None
    elif g.n >= 2:
        js = cograph_join_decompose(g)
        if js is not None:
            found["cograph"] = js
    if g.n >= 2:
        cp = cobipartite_partition(g)
        if cp is not None:
            found["cobipartite"] = cp
    ui = unit_interval_order(g)
    if ui is not None:
        found["unit-interval"] = ui
    sp = split_partition(g)
    if sp is not None:
        found["split"] = sp
    bct = block_cut_tree(g)
    if bct is not None:
        found["block"] = bct
    return {label: found[label] for label in CLASS_LABELS if label in found}
