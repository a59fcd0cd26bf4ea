"""Command-line entry point: ``evenspan <subcommand> ...``.

Exit codes: 0 success or tree found, 1 verifier rejection or oracle cap
exceeded, 2 no spanning even tree, 3 graph outside the requested class,
64 usage, 65 unreadable or unacceptable input, 70 internal integrity failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .errors import ContractViolation, EnumerationCapExceeded, IntegrityError, ParseError
from .graph import (
    Graph,
    format_graph,
    format_tree,
    is_connected,
    parse_graph,
    parse_tree,
    to_dot,
    verify_even_spanning_tree,
)
from .oracle import DEFAULT_CAP, oracle_even_spanning_tree
from .recognize import BlockCutTree, CliquePair, JoinSplit, SplitPartition, UIOrdering, recognize
from .solvers import SOLVERS, Found, NoTree, NotInClass, check_certificate, describe_certificate, solve_auto

EXIT_OK, EXIT_REJECT, EXIT_NOTREE, EXIT_NOTINCLASS = 0, 1, 2, 3
EXIT_USAGE, EXIT_DATA, EXIT_SOFTWARE = 64, 65, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which means NoTree here
        raise UsageError(f"{self.prog}: {message}")


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="evenspan", description="Spanning even trees: recognition, solvers, oracle, reduction.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("recognize", help="list the supported classes a graph belongs to")
    r.add_argument("graph", type=Path)

    s = sub.add_parser("solve", help="find a spanning even tree or a certificate that none exists")
    s.add_argument("graph", type=Path)
    s.add_argument("--class", dest="cls", default="auto", choices=["auto", *SOLVERS])
    s.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="oracle cap when --class auto falls back")
    s.add_argument("--dot", type=Path, help="also write the graph with the tree highlighted")

    v = sub.add_parser("verify", help="check that a tree file is a spanning even tree of a graph")
    v.add_argument("graph", type=Path)
    v.add_argument("tree", type=Path)

    o = sub.add_parser("oracle", help="exhaustive search for a spanning even tree")
    o.add_argument("graph", type=Path)
    o.add_argument("--cap", type=_positive, default=DEFAULT_CAP)

    d = sub.add_parser("reduce", help="build the graph encoding a DIMACS CNF formula")
    d.add_argument("cnf", type=Path)
    d.add_argument("-o", "--output", type=Path, required=True)
    d.add_argument("-m", "--map", type=Path, required=True)
    d.add_argument("--dot", type=Path)

    e = sub.add_parser("extract", help="read a truth assignment off a spanning even tree")
    e.add_argument("map", type=Path)
    e.add_argument("tree", type=Path)

    c = sub.add_parser("selfcheck", help="re-derive gadgets and sweep solvers against the oracle")
    c.add_argument("--max-n", type=_positive, default=6)
    return p


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: Path, text: str) -> None:
    try:
        path.write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _connected_graph(path: Path) -> Graph:
    g = parse_graph(_read(path))
    if not is_connected(g):
        raise ContractViolation(f"{path}: graph is not connected")
    return g


def _ids(xs) -> str:
    return " ".join(map(str, sorted(xs)))


def _witness_lines(w: object) -> list[str]:
    if isinstance(w, JoinSplit):
        return [f"  join: {_ids(w.v1)} | {_ids(w.v2)}"]
    if isinstance(w, CliquePair):
        return [f"  cliques: {_ids(w.v1)} | {_ids(w.v2)}"]
    if isinstance(w, UIOrdering):
        return ["  order: " + " ".join(map(str, w.order))]
    if isinstance(w, SplitPartition):
        return [f"  clique: {_ids(w.clique)}", f"  independent: {_ids(w.independent)}"]
    if isinstance(w, BlockCutTree):
        lines = [f"  block: {_ids(b)}" for b in w.blocks]
        lines.append(f"  cuts: {_ids(w.cuts)}".rstrip())
        return lines
    return []


def cmd_recognize(args, out: TextIO) -> int:
    found = recognize(_connected_graph(args.graph))
    for label, witness in found.items():
        out.write(label + "\n")
        out.writelines(line + "\n" for line in _witness_lines(witness))
    return EXIT_OK if found else EXIT_NOTINCLASS


def cmd_solve(args, out: TextIO) -> int:
    g = _connected_graph(args.graph)
    if args.cls == "auto":
        outcome, label = solve_auto(g, cap=args.cap)
    else:
        outcome, label = SOLVERS[args.cls](g), args.cls
    if isinstance(outcome, Found):
        out.write(format_tree(outcome.tree, comment=f"class: {label}"))
        if args.dot:
            _write(args.dot, to_dot(g, outcome.tree.edges, colors=outcome.tree.coloring))
        return EXIT_OK
    if isinstance(outcome, NoTree):
        if not check_certificate(g, outcome.certificate):
            raise IntegrityError("solver produced a certificate that does not check")
        out.write(f"# class: {label}\nno spanning even tree\n")
        out.write(describe_certificate(outcome.certificate))
        if args.dot:
            _write(args.dot, to_dot(g))
        return EXIT_NOTREE
    assert isinstance(outcome, NotInClass)
    out.write(f"not in class {label}" + (f": {outcome.reason}" if outcome.reason else "") + "\n")
    return EXIT_NOTINCLASS


def cmd_verify(args, out: TextIO) -> int:
    g = parse_graph(_read(args.graph))
    t, colors = parse_tree(_read(args.tree))
    if t.n != g.n:
        out.write(f"rejected: tree has {t.n} vertices, graph has {g.n}\n")
        return EXIT_REJECT
    report = verify_even_spanning_tree(g, t.edges)
    if not report.ok:
        out.write(f"rejected [{report.failed_check}]: {report.reason}\n")
        return EXIT_REJECT
    assert report.coloring is not None
    if colors is not None and list(colors) != list(report.coloring):
        out.write("rejected [coloring]: given colors differ from the admissible coloring\n")
        return EXIT_REJECT
    out.write("ok\ncolors:\n" + " ".join(c.value for c in report.coloring) + "\n")
    return EXIT_OK


def cmd_oracle(args, out: TextIO) -> int:
    g = _connected_graph(args.graph)
    try:
        tree = oracle_even_spanning_tree(g, args.cap)
    except EnumerationCapExceeded as exc:
        out.write(f"undecided: {exc}\n")
        return EXIT_REJECT
    if tree is None:
        out.write("no spanning even tree\n")
        return EXIT_NOTREE
    out.write(format_tree(tree, comment="class: oracle"))
    return EXIT_OK


def cmd_reduce(args, out: TextIO) -> int:
    from .reduction import build_reduction, format_map, parse_dimacs

    cnf = parse_dimacs(_read(args.cnf))
    g, rmap = build_reduction(cnf)
    _write(args.output, format_graph(g, comment=f"reduction of {cnf.num_vars} variables, {len(cnf.clauses)} clauses"))
    _write(args.map, format_map(rmap))
    if args.dot:
        labels = {v: str(role) for v, role in enumerate(rmap.roles)}
        _write(args.dot, to_dot(g, labels=labels))
    out.write(f"wrote graph with {g.n} vertices and {g.m} edges\n")
    return EXIT_OK


def cmd_extract(args, out: TextIO) -> int:
    from .reduction import extract_assignment, parse_map

    rmap = parse_map(_read(args.map))
    t, _ = parse_tree(_read(args.tree))
    if t.n != rmap.graph.n:
        raise ContractViolation(f"tree has {t.n} vertices, reduction graph has {rmap.graph.n}")
    alpha = extract_assignment(rmap, t.edges)
    out.writelines(f"v{i} = {'true' if alpha[i] else 'false'}\n" for i in sorted(alpha))
    return EXIT_OK


def selfcheck(max_n: int, out: TextIO) -> list[str]:
    """Run every internal check; return the failures (empty when all pass)."""
    from . import generators
    from .reduction import gadgets

    failures: list[str] = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        out.write(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail and not ok else "") + "\n")
        if not ok:
            failures.append(name)

    try:
        vg = gadgets.variable_gadget()
        record("variable gadget certificate", True)
    except IntegrityError as exc:
        vg = None
        record("variable gadget certificate", False, str(exc))
    try:
        cg = gadgets.connector_gadget()
        record("connector gadget certificate", all(row.passed for row in cg.table))
    except IntegrityError as exc:
        cg = None
        record("connector gadget certificate", False, str(exc))

    synth_v = gadgets.synth_variable_gadget()
    record("variable gadget re-derived", vg is not None and synth_v == vg.graph,
           "search result differs from the cached gadget")
    synth_c = gadgets.synth_connector_gadget()
    record("connector gadget re-derived", cg is not None and synth_c == cg.graph,
           "search result differs from the cached gadget")

    mismatches = 0
    checked = 0
    for g in generators.connected_graphs_atlas(min(max_n, 7)):
        exists = oracle_even_spanning_tree(g) is not None
        for label, solver in SOLVERS.items():
            if label == "cobipartite" and g.n < 2:
                continue
            res = solver(g)
            if isinstance(res, NotInClass):
                continue
            checked += 1
            if isinstance(res, Found):
                ok = exists and verify_even_spanning_tree(g, res.tree.edges).ok
            else:
                ok = not exists and check_certificate(g, res.certificate)
            mismatches += not ok
    record(f"solvers vs oracle, n <= {max_n} ({checked} runs)", mismatches == 0, f"{mismatches} mismatches")
    return failures


def cmd_selfcheck(args, out: TextIO) -> int:
    failures = selfcheck(args.max_n, out)
    if failures:
        raise IntegrityError(f"{len(failures)} self-check(s) failed")
    out.write("all checks passed\n")
    return EXIT_OK


COMMANDS = {
    "recognize": cmd_recognize,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "reduce": cmd_reduce,
    "extract": cmd_extract,
    "selfcheck": cmd_selfcheck,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (ParseError, ContractViolation) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_DATA
    except IntegrityError as exc:
        err.write(f"integrity failure: {exc}\n")
        return EXIT_SOFTWARE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
