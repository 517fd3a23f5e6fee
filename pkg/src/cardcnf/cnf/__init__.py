"""CNF data model: variables, formulas, builders, encodings and DIMACS."""

from cardcnf.cnf.dimacs import (
    dimacs_text,
    format_params,
    parse_dimacs,
    parse_params,
    read_comments,
    read_dimacs,
    write_dimacs,
    write_formula,
)
from cardcnf.cnf.encoding import Constraint, ConstraintKind, Encoding, EncodingStats
from cardcnf.cnf.formula import (
    Clause,
    ClauseCounter,
    ClauseSink,
    CnfFormula,
    FormulaBuilder,
    Literal,
    PartialAssignment,
    negate,
    normalize_clause,
    restrict,
    variable_of,
)
from cardcnf.cnf.pool import VariableId, VariablePool, VarRole, allocate_vars

__all__ = [
    "VariableId",
    "VariablePool",
    "VarRole",
    "allocate_vars",
    "Literal",
    "Clause",
    "PartialAssignment",
    "CnfFormula",
    "ClauseSink",
    "FormulaBuilder",
    "ClauseCounter",
    "negate",
    "normalize_clause",
    "restrict",
    "variable_of",
    "Constraint",
    "ConstraintKind",
    "Encoding",
    "EncodingStats",
    "write_dimacs",
    "write_formula",
    "read_dimacs",
    "read_comments",
    "parse_dimacs",
    "dimacs_text",
    "format_params",
    "parse_params",
]
