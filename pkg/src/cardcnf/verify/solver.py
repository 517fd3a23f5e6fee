"""A small complete DPLL solver used as the ground-truth oracle."""

import logging
from dataclasses import dataclass, field

from cardcnf.cnf.formula import CnfFormula, PartialAssignment
from cardcnf.verify.propagation import UNASSIGNED, Propagator

logger = logging.getLogger(__name__)


@dataclass
class SolveResult:
    """Outcome of a solver call.

    Attributes:
        satisfiable: True for SAT
        model: Full assignment of variables 1..max_var when SAT
        decisions: Branching decisions made
    """

    satisfiable: bool
    model: PartialAssignment | None = None
    decisions: int = 0

    def __bool__(self) -> bool:
        return self.satisfiable


@dataclass
class _Decision:
    trail_size: int
    var: int
    position: int
    flipped: bool = False


class Solver:
    """DPLL with watched-literal unit propagation.

    Branches on the lowest-index unassigned variable occurring in a clause,
    trying false first, so answers and models are reproducible. One solver
    can be queried repeatedly under different assumptions.
    """

    def __init__(self, formula: CnfFormula) -> None:
        self.formula = formula
        self._propagator = Propagator(formula)
        self._order = sorted(formula.variables())

    def solve(self, assumptions: PartialAssignment | None = None) -> SolveResult:
        """Decide satisfiability under `assumptions`.

        Raises:
            EncodingError: If an assumed variable is not in the formula.
        """
        prop = self._propagator
        prop.check_assumptions(assumptions or {})
        ok = prop.start()
        for var, value in (assumptions or {}).items():
            if not ok:
                break
            ok = prop.enqueue(var if value else -var)
        if not ok or not prop.propagate():
            return SolveResult(satisfiable=False)

        stack: list[_Decision] = []
        decisions = 0
        position = 0
        while True:
            position = self._next_unassigned(position)
            if position == len(self._order):
                model = {v: prop.values[v] > 0 for v in range(1, prop.num_vars + 1)}
                return SolveResult(satisfiable=True, model=model, decisions=decisions)

            var = self._order[position]
            stack.append(_Decision(len(prop.trail), var, position))
            decisions += 1
            prop.enqueue(-var)
            while not prop.propagate():
                while stack and stack[-1].flipped:
                    stack.pop()
                if not stack:
                    return SolveResult(satisfiable=False, decisions=decisions)
                top = stack[-1]
                prop.undo(top.trail_size)
                top.flipped = True
                prop.enqueue(top.var)
                position = top.position

    def _next_unassigned(self, position: int) -> int:
        values = self._propagator.values
        order = self._order
        while position < len(order) and values[order[position]] != UNASSIGNED:
            position += 1
        return position


def solve(formula: CnfFormula, assumptions: PartialAssignment | None = None) -> SolveResult:
    """Decide satisfiability of `formula` under `assumptions`.

    Returns:
        SolveResult with a model of all variables 1..max_var when SAT
        (variables in no clause are false).
    """
    return Solver(formula).solve(assumptions)
