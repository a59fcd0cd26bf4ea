from .auto import SOLVERS, solve_auto
from .block import BlockTrace, block_trace, solve_block
from .cobipartite import solve_cobipartite
from .cograph import solve_cograph
from .outcome import (
    BalancedBipartite,
    Certificate,
    DisconnectedAux,
    Found,
    NoTree,
    NotInClass,
    OddPath,
    OracleNoTree,
    SmallException,
    SolveOutcome,
    check_certificate,
    describe_certificate,
)
from .split import solve_split
from .unit_interval import solve_unit_interval

__all__ = [
    "SOLVERS",
    "BalancedBipartite",
    "BlockTrace",
    "Certificate",
    "DisconnectedAux",
    "Found",
    "NoTree",
    "NotInClass",
    "OddPath",
    "OracleNoTree",
    "SmallException",
    "SolveOutcome",
    "block_trace",
    "check_certificate",
    "describe_certificate",
    "solve_auto",
    "solve_block",
    "solve_cobipartite",
    "solve_cograph",
    "solve_split",
    "solve_unit_interval",
]
