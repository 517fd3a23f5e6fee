"""Unit propagation with two watched literals."""

from __future__ import annotations

from dataclasses import dataclass, field

from cardcnf.cnf.formula import CnfFormula, Literal, PartialAssignment
from cardcnf.errors import EncodingError

UNASSIGNED = 0
TRUE = 1
FALSE = -1


@dataclass
class PropagationResult:
    """Outcome of unit propagation.

    Attributes:
        derived: Assignment at the fixpoint (or at conflict detection),
            assumptions included
        conflict: True if a clause became empty
    """

    derived: PartialAssignment = field(default_factory=dict)
    conflict: bool = False

    def implies(self, lit: Literal) -> bool:
        """True if `lit` was derived (a conflict implies everything)."""
        if self.conflict:
            return True
        return self.derived.get(abs(lit)) == (lit > 0)


def _slot(lit: Literal) -> int:
    return 2 * lit if lit > 0 else -2 * lit + 1


class Propagator:
    """Watched-literal propagation state over one formula.

    Clauses are copied once; watch positions survive `undo`, so the same
    propagator can serve many propagation calls and a backtracking search.
    """

    def __init__(self, formula: CnfFormula) -> None:
        self.num_vars = formula.max_var
        self.values: list[int] = [UNASSIGNED] * (self.num_vars + 1)
        self.trail: list[Literal] = []
        self._head = 0
        self._clauses: list[list[Literal]] = []
        self._units: list[Literal] = []
        self._has_empty = False
        self._watches: list[list[int]] = [[] for _ in range(2 * self.num_vars + 2)]
        for clause in formula.clauses():
            if not clause:
                self._has_empty = True
            elif len(clause) == 1:
                self._units.append(clause[0])
            else:
                index = len(self._clauses)
                self._clauses.append(list(clause))
                self._watches[_slot(clause[0])].append(index)
                self._watches[_slot(clause[1])].append(index)

    def value(self, lit: Literal) -> int:
        v = self.values[abs(lit)]
        return v if lit > 0 else -v

    def enqueue(self, lit: Literal) -> bool:
        """Assign `lit` true; False if it is already false."""
        current = self.value(lit)
        if current == TRUE:
            return True
        if current == FALSE:
            return False
        self.values[abs(lit)] = TRUE if lit > 0 else FALSE
        self.trail.append(lit)
        return True

    def start(self) -> bool:
        """Clear all assignments and assert the unit clauses; False on conflict."""
        self.undo(0)
        if self._has_empty:
            return False
        return all(self.enqueue(lit) for lit in self._units)

    def undo(self, size: int) -> None:
        """Unassign the trail beyond its first `size` literals."""
        while len(self.trail) > size:
            self.values[abs(self.trail.pop())] = UNASSIGNED
        self._head = min(self._head, size)

    def propagate(self) -> bool:
        """Propagate the pending trail to a fixpoint; False on conflict."""
        values = self.values
        clauses = self._clauses
        while self._head < len(self.trail):
            false_lit = -self.trail[self._head]
            self._head += 1
            watchers = self._watches[_slot(false_lit)]
            kept: list[int] = []
            for i, index in enumerate(watchers):
                clause = clauses[index]
                if clause[0] == false_lit:
                    clause[0], clause[1] = clause[1], clause[0]
                first = clause[0]
                first_value = values[abs(first)] if first > 0 else -values[abs(first)]
                if first_value == TRUE:
                    kept.append(index)
                    continue
                for j in range(2, len(clause)):
                    lit = clause[j]
                    if (values[abs(lit)] if lit > 0 else -values[abs(lit)]) != FALSE:
                        clause[1], clause[j] = lit, false_lit
                        self._watches[_slot(lit)].append(index)
                        break
                else:
                    kept.append(index)
                    if first_value == FALSE:
                        kept.extend(watchers[i + 1 :])
                        self._watches[_slot(false_lit)] = kept
                        return False
                    self.enqueue(first)
            self._watches[_slot(false_lit)] = kept
        return True

    def assignment(self) -> PartialAssignment:
        return {abs(lit): lit > 0 for lit in self.trail}

    def check_assumptions(self, assumptions: PartialAssignment) -> None:
        """Raise EncodingError if an assumed variable is outside 1..max_var."""
        bad = sorted(v for v in assumptions if not 1 <= v <= self.num_vars)
        if bad:
            raise EncodingError(
                f"assumption on variable {bad[0]} outside the formula (max_var={self.num_vars})"
            )

    def run(self, assumptions: PartialAssignment) -> PropagationResult:
        """Propagate from scratch under `assumptions`.

        Raises:
            EncodingError: If an assumed variable is not in the formula.
        """
        self.check_assumptions(assumptions)
        ok = self.start()
        if ok:
            for var, value in assumptions.items():
                if not self.enqueue(var if value else -var):
                    ok = False
                    break
        if ok:
            ok = self.propagate()
        return PropagationResult(derived=self.assignment(), conflict=not ok)


def unit_propagate(formula: CnfFormula, assumptions: PartialAssignment) -> PropagationResult:
    """Run unit propagation on `formula` from `assumptions` to a fixpoint.

    Args:
        formula: Formula to propagate over.
        assumptions: Consistent partial assignment to start from.

    Returns:
        The derived assignment and whether an empty clause arose.
    """
    return Propagator(formula).run(assumptions)
