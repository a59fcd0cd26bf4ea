from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

from ..errors import ParseError

Assignment = Mapping[int, bool]


@dataclass(frozen=True)
class Cnf:
    """Variables are 1..num_vars; a literal is +i or -i."""

    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for clause in self.clauses:
            if not clause:
                raise ValueError("empty clause")
            vars_ = [abs(lit) for lit in clause]
            if any(lit == 0 or abs(lit) > self.num_vars for lit in clause):
                raise ValueError(f"literal out of range in clause {clause}")
            if len(set(vars_)) != len(vars_):
                raise ValueError(f"clause {clause} mentions a variable twice")

    def satisfied_by(self, assignment: Assignment) -> bool:
        return all(
            any(assignment[abs(lit)] == (lit > 0) for lit in clause)
            for clause in self.clauses
        )

    def occurrences(self) -> list[tuple[int, int, bool]]:
        """(variable, clause index, positive) for every literal, sorted by
        variable then clause (both 1-based)."""
        occ = [
            (abs(lit), j, lit > 0)
            for j, clause in enumerate(self.clauses, start=1)
            for lit in clause
        ]
        return sorted(occ)


def assignments(num_vars: int) -> Iterator[dict[int, bool]]:
    for bits in itertools.product((False, True), repeat=num_vars):
        yield {i + 1: b for i, b in enumerate(bits)}


def brute_force_sat(cnf: Cnf) -> dict[int, bool] | None:
    return next((a for a in assignments(cnf.num_vars) if cnf.satisfied_by(a)), None)


def parse_dimacs(text: str) -> Cnf:
    """Parse DIMACS CNF.  Clauses holding a variable twice (in particular
    tautologies) are rejected."""
    header: tuple[int, int] | None = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    start_line = 0
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise ParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("problem line must be 'p cnf <vars> <clauses>'", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("non-integer counts in problem line", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative counts in problem line", lineno)
            continue
        if header is None:
            raise ParseError("clause before the problem line", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"malformed literal {tok!r}", lineno) from None
            if not current:
                start_line = lineno
            if lit == 0:
                _finish_clause(current, header[0], start_line)
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if header is None:
        raise ParseError("missing problem line", lineno or 1)
    if current:
        # a final clause may omit its terminating 0
        _finish_clause(current, header[0], start_line)
        clauses.append(tuple(current))
    if len(clauses) != header[1]:
        raise ParseError(f"problem line announces {header[1]} clauses, found {len(clauses)}", lineno)
    return Cnf(header[0], tuple(clauses))


def _finish_clause(lits: Sequence[int], num_vars: int, lineno: int) -> None:
    if not lits:
        raise ParseError("empty clause", lineno)
    for lit in lits:
        if abs(lit) > num_vars:
            raise ParseError(f"literal {lit} exceeds the declared {num_vars} variables", lineno)
    seen: dict[int, int] = {}
    for lit in lits:
        prev = seen.get(abs(lit))
        if prev is not None:
            kind = "tautological clause" if prev != lit else "repeated literal"
            raise ParseError(f"{kind} on variable {abs(lit)}", lineno)
        seen[abs(lit)] = lit


def format_dimacs(cnf: Cnf) -> str:
    lines = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    lines += [" ".join(map(str, clause)) + " 0" for clause in cnf.clauses]
    return "\n".join(lines) + "\n"
