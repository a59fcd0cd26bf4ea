"""CNF formula -> graph that has a spanning even tree iff the formula is satisfiable.

Vertex ids are handed out in this order:

1. variable gadgets, six ids per variable (the connection vertex first);
2. connector gadget interiors between consecutive connection vertices,
   the gadget's two endpoints being the connection vertices themselves;
3. clause paths, ``w`` (attached to literals), ``mid``, ``end`` per clause;
4. for every negative occurrence, by (variable, clause): the middle vertex of
   the two-edge literal path and its two garbage-triangle vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ..errors import ContractViolation, IntegrityError, ParseError
from ..graph import B, Color, Edge, EvenTree, Graph, W, even_tree, norm_edge, verify_even_spanning_tree
from ..oracle import PatternKind
from .cnf import Assignment, Cnf
from .gadgets import END_A, END_B, CONNECTION, connector_gadget, variable_gadget


@dataclass(frozen=True)
class Role:
    kind: str
    params: tuple[int | str, ...]

    def __str__(self) -> str:
        return " ".join([self.kind, *map(str, self.params)])


@dataclass(frozen=True)
class ReductionMap:
    cnf: Cnf
    graph: Graph
    roles: tuple[Role, ...]
    gadget: tuple[tuple[int, ...], ...]  # per variable: global id of each local vertex
    connector: tuple[tuple[int, ...], ...]  # per consecutive pair, same
    clause_path: tuple[tuple[int, int, int], ...]  # (w, mid, end) per clause
    literal_mid: Mapping[tuple[int, int], int] = field(hash=False)
    garbage: Mapping[tuple[int, int], tuple[int, int]] = field(hash=False)
    true_tree: frozenset[Edge] = frozenset()  # in gadget-local ids
    false_tree: frozenset[Edge] = frozenset()

    def connection(self, i: int) -> int:
        return self.gadget[i - 1][CONNECTION]


def build_reduction(cnf: Cnf) -> tuple[Graph, ReductionMap]:
    vg = variable_gadget()
    cg = connector_gadget()
    roles: list[Role] = []
    edges: list[Edge] = []

    gadget: list[tuple[int, ...]] = []
    for i in range(1, cnf.num_vars + 1):
        base = len(roles)
        ids = tuple(range(base, base + vg.graph.n))
        for local in range(vg.graph.n):
            roles.append(Role("connection", (i,)) if local == CONNECTION else Role("variable-gadget", (i, local)))
        edges += [norm_edge(ids[u], ids[v]) for u, v in vg.graph.edges]
        gadget.append(ids)

    connector: list[tuple[int, ...]] = []
    for i in range(1, cnf.num_vars):
        ids = []
        for local in range(cg.graph.n):
            if local == END_A:
                ids.append(gadget[i - 1][CONNECTION])
            elif local == END_B:
                ids.append(gadget[i][CONNECTION])
            else:
                ids.append(len(roles))
                roles.append(Role("connector", (i, local)))
        edges += [norm_edge(ids[u], ids[v]) for u, v in cg.graph.edges]
        connector.append(tuple(ids))

    clause_path: list[tuple[int, int, int]] = []
    for j in range(1, len(cnf.clauses) + 1):
        w, mid, end = len(roles), len(roles) + 1, len(roles) + 2
        roles += [Role("clause-path", (j, pos)) for pos in ("w", "mid", "end")]
        edges += [(w, mid), (mid, end)]
        clause_path.append((w, mid, end))

    literal_mid: dict[tuple[int, int], int] = {}
    garbage: dict[tuple[int, int], tuple[int, int]] = {}
    for i, j, positive in cnf.occurrences():
        v, w = gadget[i - 1][CONNECTION], clause_path[j - 1][0]
        if positive:
            edges.append(norm_edge(v, w))
            continue
        p, g1, g2 = len(roles), len(roles) + 1, len(roles) + 2
        roles += [Role("literal-path", (i, j, "mid")), Role("garbage", (i, j, 1)), Role("garbage", (i, j, 2))]
        edges += [norm_edge(v, p), norm_edge(p, w), (p, g1), (p, g2), (g1, g2)]
        literal_mid[(i, j)] = p
        garbage[(i, j)] = (g1, g2)

    g = Graph.from_edges(len(roles), edges)
    rmap = ReductionMap(
        cnf, g, tuple(roles), tuple(gadget), tuple(connector), tuple(clause_path),
        literal_mid, garbage, vg.true_tree, vg.false_tree,
    )
    return g, rmap


class _UF:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _normalize(assignment: Assignment | Sequence[bool], num_vars: int) -> dict[int, bool]:
    if isinstance(assignment, Mapping):
        out = {i: bool(assignment[i]) for i in range(1, num_vars + 1)}
    else:
        if len(assignment) != num_vars:
            raise ContractViolation("assignment must cover every variable")
        out = {i + 1: bool(b) for i, b in enumerate(assignment)}
    return out


def tree_from_assignment(
    cnf: Cnf, rmap: ReductionMap, assignment: Assignment | Sequence[bool]
) -> EvenTree | None:
    """Spanning even tree encoding ``assignment``, or None when the
    construction leaves the graph disconnected (the assignment falsifies
    some clause)."""
    alpha = _normalize(assignment, cnf.num_vars)
    g = rmap.graph
    uf = _UF(g.n)
    chosen: list[Edge] = []

    def add(u: int, v: int) -> bool:
        if uf.union(u, v):
            chosen.append(norm_edge(u, v))
            return True
        return False

    color: dict[int, Color] = {}
    for i in range(1, cnf.num_vars + 1):
        ids = rmap.gadget[i - 1]
        local = rmap.true_tree if alpha[i] else rmap.false_tree
        for u, v in sorted(local):
            add(ids[u], ids[v])
        color[ids[CONNECTION]] = W if alpha[i] else B

    for w, mid, end in rmap.clause_path:
        add(w, mid)
        add(mid, end)

    for i, j, positive in cnf.occurrences():
        v, w = rmap.connection(i), rmap.clause_path[j - 1][0]
        if positive:
            if alpha[i]:
                add(v, w)
            continue
        p = rmap.literal_mid[(i, j)]
        add(v, p)
        if not alpha[i]:
            add(p, w)
        g1, g2 = rmap.garbage[(i, j)]
        if color[v] is B:
            # p is white: both triangle vertices become black leaves on p
            add(p, g1)
            add(p, g2)
        else:
            add(p, g1)
            add(g1, g2)

    cg = connector_gadget()
    for i in range(1, cnf.num_vars):
        ids = rmap.connector[i - 1]
        a, b = ids[END_A], ids[END_B]
        kind = PatternKind.CONNECTOR if uf.find(a) != uf.find(b) else PatternKind.DISCONNECTOR
        pattern = cg.witness(kind, color[a], color[b])
        for u, v in pattern.edges:
            if not add(ids[u], ids[v]):
                raise IntegrityError("connector pattern closed a cycle")

    if len(chosen) != g.n - 1:
        if cnf.satisfied_by(alpha):
            raise IntegrityError("satisfying assignment produced a disconnected subgraph")
        return None
    report = verify_even_spanning_tree(g, chosen)
    if not report.ok:
        raise IntegrityError(f"constructed tree is not even: {report.reason}")
    return even_tree(g, chosen)


def extract_assignment(rmap: ReductionMap, tree: EvenTree | Iterable[Sequence[int]]) -> dict[int, bool]:
    """Read the truth assignment off a spanning even tree of the reduction graph."""
    edges = tree.edges if isinstance(tree, EvenTree) else {norm_edge(u, v) for u, v in tree}
    report = verify_even_spanning_tree(rmap.graph, edges)
    if not report.ok:
        raise ContractViolation(f"not a spanning even tree of the reduction graph: {report.reason}")
    alpha: dict[int, bool] = {}
    for i, ids in enumerate(rmap.gadget, start=1):
        local_of = {gid: loc for loc, gid in enumerate(ids)}
        inside = frozenset(
            norm_edge(local_of[u], local_of[v])
            for u, v in edges
            if u in local_of and v in local_of
        )
        if inside == rmap.true_tree:
            alpha[i] = True
        elif inside == rmap.false_tree:
            alpha[i] = False
        else:
            raise IntegrityError(f"tree restricted to gadget {i} matches neither reference tree")
    if not rmap.cnf.satisfied_by(alpha):
        raise IntegrityError("extracted assignment does not satisfy the formula")
    return alpha


# ---------------------------------------------------------------------------
# map file


def format_map(rmap: ReductionMap) -> str:
    lines = [
        "# reduction map: id role params",
        f"cnf {rmap.cnf.num_vars} {len(rmap.cnf.clauses)}",
    ]
    lines += ["clause " + " ".join(map(str, c)) for c in rmap.cnf.clauses]
    lines.append("tree-true " + " ".join(f"{u}-{v}" for u, v in sorted(rmap.true_tree)))
    lines.append("tree-false " + " ".join(f"{u}-{v}" for u, v in sorted(rmap.false_tree)))
    lines += [f"{v} {role}" for v, role in enumerate(rmap.roles)]
    return "\n".join(lines) + "\n"


def _parse_local_tree(toks: list[str], lineno: int) -> frozenset[Edge]:
    out = set()
    for tok in toks:
        try:
            u, v = (int(x) for x in tok.split("-"))
        except ValueError:
            raise ParseError(f"malformed gadget edge {tok!r}", lineno) from None
        out.add(norm_edge(u, v))
    return frozenset(out)


def parse_map(text: str) -> ReductionMap:
    """Parse a map file and rebuild the reduction it describes.

    The role lines and reference trees must agree with the rebuilt
    reduction; a mismatch raises IntegrityError.
    """
    num_vars = num_clauses = None
    clauses: list[tuple[int, ...]] = []
    trees: dict[str, frozenset[Edge]] = {}
    roles: dict[int, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        head = toks[0]
        try:
            if head == "cnf":
                num_vars, num_clauses = int(toks[1]), int(toks[2])
            elif head == "clause":
                clauses.append(tuple(int(t) for t in toks[1:]))
            elif head in ("tree-true", "tree-false"):
                trees[head] = _parse_local_tree(toks[1:], lineno)
            else:
                roles[int(head)] = (" ".join(toks[1:]), lineno)
        except (ValueError, IndexError):
            raise ParseError("malformed map line", lineno) from None
    if num_vars is None:
        raise ParseError("missing 'cnf' line", 1)
    if len(clauses) != num_clauses:
        raise ParseError(f"expected {num_clauses} clause lines, found {len(clauses)}")
    try:
        cnf = Cnf(num_vars, tuple(clauses))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    _, rmap = build_reduction(cnf)
    if sorted(roles) != list(range(len(rmap.roles))):
        raise ParseError("role lines must cover ids 0..n-1 exactly once")
    for v, (text_role, lineno) in roles.items():
        if text_role != str(rmap.roles[v]):
            raise ParseError(f"role of vertex {v} disagrees with the rebuilt reduction", lineno)
    if trees.get("tree-true", rmap.true_tree) != rmap.true_tree or trees.get(
        "tree-false", rmap.false_tree
    ) != rmap.false_tree:
        raise IntegrityError("reference gadget trees disagree with the cached gadget")
    return rmap
