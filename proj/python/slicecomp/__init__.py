"""Slice-based complementation of Büchi automata."""

from ._slicecomp import (
    Automaton,
    AutomatonError,
    BudgetExceeded,
    OafError,
    accepts,
    check_complement,
    check_equivalent,
    complement,
    complement_dpw,
    emit_oaf,
    generate,
    generate_dpw,
    live,
    maximize_acceptance,
    parity_to_buchi,
    parse_oaf,
    reachable,
    run_task,
    simplify,
    trace,
)

__all__ = [
    "Automaton",
    "AutomatonError",
    "BudgetExceeded",
    "OafError",
    "accepts",
    "check_complement",
    "check_equivalent",
    "complement",
    "complement_dpw",
    "emit_oaf",
    "generate",
    "generate_dpw",
    "live",
    "maximize_acceptance",
    "parity_to_buchi",
    "parse_oaf",
    "reachable",
    "run_task",
    "simplify",
    "trace",
]
