"""Spanning even trees: recognition, per-class solvers, exhaustive oracle and the SAT reduction."""
