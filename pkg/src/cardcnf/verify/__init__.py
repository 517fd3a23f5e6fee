"""Ground-truth verification: propagation, solving, equivalence and completeness."""

from cardcnf.verify.completeness import CompletenessReport, check_propagation_complete
from cardcnf.verify.oracle import (
    EXHAUSTIVE_LIMIT,
    EquivalenceReport,
    Mismatch,
    Strategy,
    check_encoding_correct,
)
from cardcnf.verify.projection import distinguishing_coordinate
from cardcnf.verify.propagation import PropagationResult, Propagator, unit_propagate
from cardcnf.verify.solver import SolveResult, Solver, solve

__all__ = [
    "PropagationResult",
    "Propagator",
    "unit_propagate",
    "SolveResult",
    "Solver",
    "solve",
    "Strategy",
    "Mismatch",
    "EquivalenceReport",
    "EXHAUSTIVE_LIMIT",
    "check_encoding_correct",
    "CompletenessReport",
    "check_propagation_complete",
    "distinguishing_coordinate",
]
