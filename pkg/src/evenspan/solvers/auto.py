from __future__ import annotations

from typing import Callable

from ..errors import ContractViolation
from ..graph import Graph, is_connected
from ..oracle import DEFAULT_CAP, oracle_even_spanning_tree
from .block import solve_block
from .cobipartite import solve_cobipartite
from .cograph import solve_cograph
from .outcome import Found, NoTree, NotInClass, OracleNoTree, SolveOutcome
from .split import solve_split
from .unit_interval import solve_unit_interval

SOLVERS: dict[str, Callable[[Graph], SolveOutcome]] = {
    "block": solve_block,
    "split": solve_split,
    "unit-interval": solve_unit_interval,
    "cograph": solve_cograph,
    "cobipartite": solve_cobipartite,
}

ORACLE_MAX_N = 20


def solve_auto(
    g: Graph, oracle_max_n: int = ORACLE_MAX_N, cap: int = DEFAULT_CAP
) -> tuple[SolveOutcome, str]:
    """First applicable class solver, else the exhaustive oracle.

    Returns the outcome and the label of what decided it; ``"unsupported"``
    with NotInClass when no solver applies and ``g`` is too big for the oracle.
    """
    if not is_connected(g):
        raise ContractViolation("solve_auto expects a connected graph")
    for label, solver in SOLVERS.items():
        if label == "cobipartite" and g.n < 2:
            continue
        out = solver(g)
        if not isinstance(out, NotInClass):
            return out, label
    if g.n <= oracle_max_n:
        tree = oracle_even_spanning_tree(g, cap)
        if tree is not None:
            return Found(tree), "oracle"
        return NoTree(OracleNoTree()), "oracle"
    return NotInClass("no class solver applies and the graph is too large for the oracle"), "unsupported"
