"""INT-007: Test the verification tools.

This test verifies that:
1. Unit propagation reaches the fixpoint and reports conflicts
2. The DPLL solver decides satisfiability and returns models
3. The equivalence oracle passes correct encodings and catches broken ones
4. The propagation-completeness check finds missed entailments
5. A distinguishing coordinate exists for at most k points of arity k
"""

from itertools import combinations, product

import pytest

from cardcnf.cnf import CnfFormula, Constraint, Encoding, parse_dimacs
from cardcnf.encoders import build_encoding, encode_sequential
from cardcnf.errors import EncodingError, StrategyError
from cardcnf.verify import (
    EXHAUSTIVE_LIMIT,
    Propagator,
    Solver,
    Strategy,
    check_encoding_correct,
    check_propagation_complete,
    distinguishing_coordinate,
    solve,
    unit_propagate,
)


def satisfies(formula, model):
    """Every clause has a true literal under the model."""
    return all(any(model[abs(lit)] == (lit > 0) for lit in clause) for clause in formula)


def drop_last_clause(encoding):
    """A copy of the encoding without its final clause."""
    formula = encoding.formula
    clauses = list(formula.clauses())[:-1]
    broken = CnfFormula.from_clauses(
        clauses, list(formula.input_vars), list(formula.aux_vars), formula.max_var
    )
    return Encoding(formula=broken, constraint=encoding.constraint, encoder_name="broken")


class TestUnitPropagation:
    """Test watched-literal propagation."""

    def test_chain(self):
        """Test a chain of implications."""
        formula = CnfFormula.from_clauses([[1, 2], [-1, 3], [-3, -2]])
        result = unit_propagate(formula, {1: True})

        assert not result.conflict
        assert result.derived == {1: True, 3: True, 2: False}
        assert result.implies(-2)
        assert not result.implies(2)

    def test_conflict(self):
        """Test that contradictory clauses yield a conflict."""
        formula = CnfFormula.from_clauses([[-1, 2], [-1, -2]])
        result = unit_propagate(formula, {1: True})

        assert result.conflict
        assert result.implies(5)

    def test_unit_clauses(self):
        """Test that unit clauses are asserted up front."""
        formula = CnfFormula.from_clauses([[1], [-1, 2]])
        assert unit_propagate(formula, {}).derived == {1: True, 2: True}

    def test_contradictory_units(self):
        """Test conflicting unit clauses."""
        formula = CnfFormula.from_clauses([[1], [-1]])
        assert unit_propagate(formula, {}).conflict

    def test_empty_clause(self):
        """Test that the empty clause is an immediate conflict."""
        formula = CnfFormula.from_clauses([[]], max_var=1)
        assert unit_propagate(formula, {}).conflict

    @pytest.mark.parametrize("var", [0, 4, 100])
    def test_assumption_outside_formula(self, var):
        """Test that assumptions on unknown variables are rejected."""
        formula = CnfFormula.from_clauses([[1, 2], [-2, 3]])
        with pytest.raises(EncodingError, match=f"variable {var} outside the formula"):
            unit_propagate(formula, {1: True, var: False})
        with pytest.raises(EncodingError, match="max_var=3"):
            Solver(formula).solve({var: True})

    def test_reuse(self):
        """Test that one propagator serves independent calls."""
        formula = CnfFormula.from_clauses([[-1, 2], [-2, 3], [-4, -3]])
        propagator = Propagator(formula)

        first = propagator.run({1: True})
        assert first.derived == {1: True, 2: True, 3: True, 4: False}
        second = propagator.run({4: True})
        assert second.derived == {4: True, 3: False, 2: False, 1: False}
        assert propagator.run({1: True, 4: True}).conflict

    def test_amo_single_input(self):
        """Test that one true input of the pairwise AMO falsifies the rest."""
        encoding = build_encoding("direct", 6)
        result = unit_propagate(encoding.formula, {3: True})
        assert all(result.implies(-v) for v in (1, 2, 4, 5, 6))


class TestSolver:
    """Test the DPLL solver."""

    def test_model_satisfies_formula(self):
        """Test that SAT answers come with a model."""
        encoding = build_encoding("gp", 30, 2)
        result = solve(encoding.formula, {1: True, 7: True})

        assert result.satisfiable
        assert satisfies(encoding.formula, result.model)
        assert result.model[1] and result.model[7]

    def test_pigeonhole_unsat(self):
        """Test three pigeons in two holes."""
        # pigeon i in hole h is variable 2i + h
        clauses = [[2 * i + 1, 2 * i + 2] for i in range(3)]
        for h in (1, 2):
            for i, j in combinations(range(3), 2):
                clauses.append([-(2 * i + h), -(2 * j + h)])
        result = solve(CnfFormula.from_clauses(clauses))

        assert not result.satisfiable
        assert result.model is None
        assert result.decisions > 0

    def test_assumptions(self):
        """Test solving under assumptions, repeatedly."""
        solver = Solver(build_encoding("seqcounter", 8, 2).formula)
        assert solver.solve({1: True, 2: True})
        assert not solver.solve({1: True, 2: True, 8: True})
        assert solver.solve({8: True})

    def test_empty_formula(self):
        """Test that a formula without clauses is satisfiable."""
        assert solve(CnfFormula.from_clauses([], max_var=3)).model == {
            1: False,
            2: False,
            3: False,
        }


class TestEquivalenceOracle:
    """Test the semantic equivalence check."""

    def test_exhaustive_counts_assignments(self):
        """Test that exhaustive checks cover 2^n assignments."""
        report = check_encoding_correct(encode_sequential(range(1, 9), 2))
        assert report.passed
        assert report.checked_assignments == 256
        assert report.to_dict() == {"strategy": "exhaustive", "checked": 256, "passed": True}

    def test_detects_missing_clause(self):
        """Test that a broken counter admits weight k + 1."""
        broken = drop_last_clause(encode_sequential(range(1, 6), 2))
        report = check_encoding_correct(broken)

        assert not report.passed
        mismatch = report.first_mismatch
        assert mismatch.expected is False
        assert mismatch.got is True
        assert mismatch.weight == 3
        assert mismatch.assignment[-1] is True

        witness = report.to_dict(broken.input_vars)["witness"]
        assert witness["expected"] == "UNSAT"
        assert witness["got"] == "SAT"
        assert 5 in witness["true_inputs"]

    def test_weight_window_detects_missing_clause(self):
        """Test that the window strategy also finds the defect."""
        broken = drop_last_clause(encode_sequential(range(1, 31), 2))
        report = check_encoding_correct(broken, Strategy.WEIGHT_WINDOW, random_samples=10)
        assert not report.passed

    def test_exhaustive_limit(self):
        """Test that exhaustive checking stops at 20 inputs."""
        assert EXHAUSTIVE_LIMIT == 20
        with pytest.raises(StrategyError, match="n <= 20"):
            check_encoding_correct(build_encoding("seqcounter", 21, 2))

    def test_unknown_constraint(self):
        """Test that files without a constraint cannot be checked."""
        encoding = parse_dimacs("p cnf 2 1\n-1 -2 0\n")
        with pytest.raises(StrategyError, match="unknown constraint"):
            check_encoding_correct(encoding)

    def test_bad_strategy_name(self):
        """Test that strategy names are validated."""
        with pytest.raises(ValueError):
            check_encoding_correct(build_encoding("direct", 3), "sometimes")

    def test_indicator_constraint(self):
        """Test the oracle on the indicator variant."""
        encoding = build_encoding("amo-prime", 5)
        assert encoding.constraint == Constraint.amo_indicator()
        assert check_encoding_correct(encoding).checked_assignments == 64


class TestPropagationCompleteness:
    """Test the propagation-completeness check."""

    def test_sequential_counter(self):
        """Test that the counter passes random prefixes."""
        report = check_propagation_complete(build_encoding("seqcounter", 30, 3), prefixes=300)
        assert report.passed
        assert not report.exhaustive
        assert report.to_dict()["verdict"] == "no counterexample found"

    def test_amo_verdict_is_complete(self):
        """Test the exhaustive verdict for AMO."""
        report = check_propagation_complete(build_encoding("product", 30), prefixes=50)
        assert report.to_dict()["verdict"] == "complete"
        assert report.checked == 30 + 50

    def test_disjunctive_grid_is_not_complete(self):
        """Test that copies into some column do not force the other inputs false."""
        encoding = build_encoding("dgc", 1000, 2)
        assert "fallback" not in encoding.params
        report = check_propagation_complete(encoding, prefixes=200, seed=1)

        assert not report.passed
        assert report.missing is not None
        assert sum(1 for lit in report.counterexample if lit > 0) >= 2
        assert report.to_dict()["counterexample"] == report.counterexample

    def test_weak_amo_misses_entailment(self):
        """Test a formula whose clauses never fire on a single true input."""
        formula = CnfFormula.from_clauses([[-1, -2, 3]], input_vars=[1, 2], aux_vars=[3])
        weak = Encoding(formula=formula, constraint=Constraint.amo(), encoder_name="weak")
        report = check_propagation_complete(weak, prefixes=20)

        assert not report.passed
        assert report.counterexample == [1]
        assert report.missing == -2


class TestDistinguishingCoordinate:
    """Test projections of grid points."""

    def test_all_small_sets_of_the_cube(self):
        """Test every set of at most three points of [3]^3."""
        points = list(product(range(1, 4), repeat=3))
        for size in (1, 2, 3):
            for chosen in combinations(points, size):
                d = distinguishing_coordinate(chosen)
                assert 1 <= d <= 3
                projected = {p[: d - 1] + p[d:] for p in chosen}
                assert len(projected) == size

    def test_first_working_coordinate(self):
        """Test that the first coordinate is preferred."""
        assert distinguishing_coordinate([(1, 2), (1, 3)]) == 1
        assert distinguishing_coordinate([(1, 2), (2, 2)]) == 2

    @pytest.mark.parametrize(
        "points",
        [
            [],
            [(1, 2), (1, 2)],
            [(1, 2), (1, 2, 3)],
            [(1, 1), (1, 2), (2, 1)],
        ],
    )
    def test_invalid_inputs(self, points):
        """Test repeated points, mixed arity and too many points."""
        with pytest.raises(ValueError):
            distinguishing_coordinate(points)
