from .cnf import Cnf, assignments, brute_force_sat, format_dimacs, parse_dimacs
from .construction import (
    ReductionMap,
    Role,
    build_reduction,
    extract_assignment,
    format_map,
    parse_map,
    tree_from_assignment,
)
from .gadgets import (
    ConnectorGadget,
    VariableGadget,
    connector_gadget,
    synth_connector_gadget,
    synth_variable_gadget,
    variable_gadget,
)

__all__ = [
    "Cnf",
    "ConnectorGadget",
    "ReductionMap",
    "Role",
    "VariableGadget",
    "assignments",
    "brute_force_sat",
    "build_reduction",
    "connector_gadget",
    "extract_assignment",
    "format_dimacs",
    "format_map",
    "parse_dimacs",
    "parse_map",
    "synth_connector_gadget",
    "synth_variable_gadget",
    "tree_from_assignment",
    "variable_gadget",
]
