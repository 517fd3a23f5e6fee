"""CNF formulas and clause builders.

Clauses are stored flat: all literals of the formula live in one int array
and a second array holds the end offset of every clause. A clause is a
tuple of DIMACS literals sorted by variable with duplicates removed.
"""

from __future__ import annotations

from array import array
from collections import Counter
from collections.abc import Iterable, Iterator, Sequence
from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np

from cardcnf.cnf.pool import VariableId, VariablePool, VarRole
from cardcnf.errors import EncodingError

Literal = int
Clause = tuple[Literal, ...]
PartialAssignment = dict[VariableId, bool]


def negate(lit: Literal) -> Literal:
    """Return the complementary literal."""
    return -lit


def variable_of(lit: Literal) -> VariableId:
    """Return the variable of a literal."""
    return lit if lit > 0 else -lit


def normalize_clause(lits: Iterable[Literal]) -> Clause:
    """Return the canonical form of a clause.

    Raises:
        EncodingError: On literal 0 or a tautological clause.
    """
    clause = tuple(sorted(set(lits), key=abs))
    previous = 0
    for lit in clause:
        if lit == 0:
            raise EncodingError("literal 0 is not allowed in a clause")
        if lit == -previous:
            raise EncodingError(f"tautological clause {clause}")
        previous = lit
    return clause


@dataclass(frozen=True, eq=False)
class CnfFormula:
    """An immutable clause list over numbered variables with role metadata.

    Attributes:
        literals: Flat literal storage of all clauses
        ends: End offset of each clause inside `literals`
        max_var: Largest declared variable id
        input_vars: Input variables in declaration order
        aux_vars: Auxiliary variables in allocation order
    """

    literals: array
    ends: array
    max_var: int
    input_vars: array
    aux_vars: array

    @classmethod
    def from_clauses(
        cls,
        clauses: Iterable[Iterable[Literal]],
        input_vars: Sequence[VariableId] | None = None,
        aux_vars: Sequence[VariableId] | None = None,
        max_var: int | None = None,
    ) -> CnfFormula:
        """Build a formula from literal lists.

        Without role metadata every variable up to `max_var` counts as input.

        Raises:
            EncodingError: On tautologies, overlapping roles, or clause
                variables without a role.
        """
        literals = array("i")
        ends = array("q")
        seen_max = 0
        for lits in clauses:
            clause = normalize_clause(lits)
            literals.extend(clause)
            ends.append(len(literals))
            if clause:
                seen_max = max(seen_max, abs(clause[-1]))

        aux = array("i", aux_vars or ())
        declared_max = max(
            seen_max,
            max_var or 0,
            max(input_vars, default=0) if input_vars is not None else 0,
            max(aux, default=0),
        )
        if input_vars is None:
            aux_set = set(aux)
            inputs = array("i", (v for v in range(1, declared_max + 1) if v not in aux_set))
        else:
            inputs = array("i", input_vars)

        formula = cls(literals, ends, declared_max, inputs, aux)
        errors = formula.validate()
        if errors:
            raise EncodingError("; ".join(errors))
        return formula

    def validate(self) -> list[str]:
        """Check the role invariants.

        Returns:
            List of validation error messages (empty if valid).
        """
        errors: list[str] = []
        inputs = set(self.input_vars)
        aux = set(self.aux_vars)
        overlap = inputs & aux
        if overlap:
            errors.append(f"variables both input and auxiliary: {sorted(overlap)[:5]}")
        declared = inputs | aux
        stray = {abs(lit) for lit in self.literals} - declared
        if stray:
            errors.append(f"clause variables without a role: {sorted(stray)[:5]}")
        if declared and max(declared) > self.max_var:
            errors.append(f"max_var {self.max_var} below declared variable {max(declared)}")
        return errors

    def __len__(self) -> int:
        return len(self.ends)

    @property
    def size(self) -> int:
        """Number of clauses."""
        return len(self.ends)

    @property
    def num_literals(self) -> int:
        """Total number of literal occurrences."""
        return len(self.literals)

    def clause(self, index: int) -> Clause:
        """Return clause `index` as a tuple."""
        start = self.ends[index - 1] if index > 0 else 0
        return tuple(self.literals[start : self.ends[index]])

    def clauses(self) -> Iterator[Clause]:
        """Iterate over clauses in order."""
        start = 0
        lits = self.literals
        for end in self.ends:
            yield tuple(lits[start:end])
            start = end

    def __iter__(self) -> Iterator[Clause]:
        return self.clauses()

    def clause_multiset(self) -> Counter[Clause]:
        """Clauses as a multiset, for order-insensitive comparison."""
        return Counter(self.clauses())

    def variables(self) -> set[VariableId]:
        """Variables occurring in at least one clause."""
        return {abs(lit) for lit in self.literals}

    def has_empty_clause(self) -> bool:
        """True if some clause has no literals."""
        start = 0
        for end in self.ends:
            if end == start:
                return True
            start = end
        return False

    def restrict(self, assignment: PartialAssignment) -> CnfFormula:
        """Return the restriction of this formula by a partial assignment.

        Clauses satisfied by the assignment are dropped and falsified
        literals are deleted from the survivors. The result may contain the
        empty clause. Role metadata is unchanged.
        """
        literals = array("i")
        ends = array("q")
        for clause in self.clauses():
            kept: list[int] = []
            satisfied = False
            for lit in clause:
                value = assignment.get(abs(lit))
                if value is None:
                    kept.append(lit)
                elif value == (lit > 0):
                    satisfied = True
                    break
            if not satisfied:
                literals.extend(kept)
                ends.append(len(literals))
        return CnfFormula(literals, ends, self.max_var, self.input_vars, self.aux_vars)


def restrict(formula: CnfFormula, assignment: PartialAssignment) -> CnfFormula:
    """Restrict `formula` by `assignment` (see CnfFormula.restrict)."""
    return formula.restrict(assignment)


class ClauseSink:
    """Shared state of clause builders: the variable pool and group tallies."""

    def __init__(self, pool: VariablePool | None = None) -> None:
        self.pool = pool if pool is not None else VariablePool()
        self.groups: dict[str, int] = {}
        self._active: list[str] = []
        self._count = 0

    @property
    def num_clauses(self) -> int:
        """Clauses emitted so far."""
        return self._count

    @property
    def num_aux(self) -> int:
        """Auxiliary variables allocated so far."""
        return len(self.pool.aux_vars)

    def new_var(self) -> VariableId:
        """Allocate one auxiliary variable."""
        return self.pool.new_var(VarRole.AUX)

    def new_vars(self, count: int) -> list[VariableId]:
        """Allocate `count` auxiliary variables."""
        return self.pool.allocate(count, VarRole.AUX)

    def new_block(self, count: int) -> VariableId:
        """Allocate `count` consecutive auxiliary variables, returning the first."""
        return self.pool.allocate_block(count, VarRole.AUX)

    @contextmanager
    def group(self, name: str) -> Iterator[None]:
        """Tally clauses emitted inside the block under `name`.

        Groups nest; a clause counts toward every enclosing group, once per
        distinct name.
        """
        self.groups.setdefault(name, 0)
        if name in self._active:
            yield
            return
        self._active.append(name)
        try:
            yield
        finally:
            self._active.pop()

    def add(self, *lits: Literal) -> None:
        """Emit one clause given as positional literals."""
        self.add_clause(lits)

    def add_clause(self, lits: Iterable[Literal]) -> None:
        """Emit one clause."""
        self._store(lits)
        self._count += 1
        for name in self._active:
            self.groups[name] += 1

    def add_rows(self, rows: np.ndarray) -> None:
        """Emit every row of a 2-D integer array as one clause."""
        for row in rows.tolist():
            self.add_clause(row)

    def _store(self, lits: Iterable[Literal]) -> None:
        raise NotImplementedError


class FormulaBuilder(ClauseSink):
    """Clause sink that stores canonical clauses and builds a CnfFormula."""

    def __init__(self, pool: VariablePool | None = None) -> None:
        super().__init__(pool)
        self._literals = array("i")
        self._ends = array("q")

    def _store(self, lits: Iterable[Literal]) -> None:
        clause = normalize_clause(lits)
        if clause and abs(clause[-1]) > self.pool.max_var:
            raise EncodingError(f"literal {clause[-1]} uses an unallocated variable")
        self._literals.extend(clause)
        self._ends.append(len(self._literals))

    def build(self) -> CnfFormula:
        """Freeze the emitted clauses into a CnfFormula."""
        return CnfFormula(
            array("i", self._literals),
            array("q", self._ends),
            self.pool.max_var,
            array("i", self.pool.input_vars),
            array("i", self.pool.aux_vars),
        )


class ClauseCounter(ClauseSink):
    """Clause sink that only counts; runs the same emission code without storage."""

    def add(self, *lits: Literal) -> None:
        self._count += 1
        for name in self._active:
            self.groups[name] += 1

    def add_rows(self, rows: np.ndarray) -> None:
        count = int(rows.shape[0])
        self._count += count
        for name in self._active:
            self.groups[name] += count

    def add_clause(self, lits: Iterable[Literal]) -> None:
        self._count += 1
        for name in self._active:
            self.groups[name] += 1


