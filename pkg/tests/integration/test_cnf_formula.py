"""INT-001: Test the CNF data model.

This test verifies that:
1. Variable pools hand out increasing ids and track roles
2. Clauses are normalized and tautologies are rejected
3. FormulaBuilder and ClauseCounter agree on clause counts and groups
4. Restriction drops satisfied clauses and falsified literals
5. Encodings validate their constraint against the inputs
"""

import numpy as np
import pytest

from cardcnf.cnf import (
    ClauseCounter,
    CnfFormula,
    Constraint,
    ConstraintKind,
    Encoding,
    FormulaBuilder,
    VariablePool,
    VarRole,
    allocate_vars,
    normalize_clause,
    restrict,
)
from cardcnf.errors import EncodingError


class TestVariablePool:
    """Test variable allocation."""

    def test_allocate_is_monotone(self):
        """Test that ids increase across allocations."""
        pool = VariablePool()
        first = allocate_vars(pool, 3, VarRole.INPUT)
        second = allocate_vars(pool, 2)

        assert first == [1, 2, 3]
        assert second == [4, 5]
        assert pool.max_var == 5
        assert list(pool.input_vars) == [1, 2, 3]
        assert list(pool.aux_vars) == [4, 5]

    def test_allocate_zero(self):
        """Test that allocating nothing leaves the pool unchanged."""
        pool = VariablePool()
        assert allocate_vars(pool, 0) == []
        assert pool.max_var == 0

    def test_declare_rejects_duplicates(self):
        """Test that duplicate declared inputs are an error."""
        pool = VariablePool()
        with pytest.raises(EncodingError, match="duplicate"):
            pool.declare([1, 2, 2])

    def test_declare_rejects_reused_ids(self):
        """Test that declaring an already allocated id fails."""
        pool = VariablePool()
        pool.allocate(3)
        with pytest.raises(EncodingError, match="already allocated"):
            pool.declare([2])

    def test_negative_start_rejected(self):
        """Test that a negative start is rejected."""
        with pytest.raises(EncodingError):
            VariablePool(start=-1)


class TestClauses:
    """Test clause normalization."""

    def test_normalize_sorts_and_deduplicates(self):
        """Test canonical clause order."""
        assert normalize_clause([3, -1, 3, 2]) == (-1, 2, 3)

    def test_tautology_rejected(self):
        """Test that x | -x is rejected."""
        with pytest.raises(EncodingError, match="tautological"):
            normalize_clause([1, -1])

    def test_literal_zero_rejected(self):
        """Test that literal 0 is rejected."""
        with pytest.raises(EncodingError):
            normalize_clause([0, 1])

    def test_empty_clause_allowed(self):
        """Test that the empty clause is representable."""
        formula = CnfFormula.from_clauses([[]], max_var=1)
        assert formula.has_empty_clause()
        assert len(formula) == 1


class TestBuilders:
    """Test FormulaBuilder and ClauseCounter."""

    def _emit(self, sink):
        xs = sink.pool.allocate(4, VarRole.INPUT)
        with sink.group("outer"):
            sink.add(-xs[0], -xs[1])
            with sink.group("inner"):
                sink.add_clause([-xs[2], -xs[3]])
                with sink.group("outer"):
                    sink.add_rows(np.array([[xs[0], xs[1]], [xs[2], xs[3]]]))
        aux = sink.new_var()
        sink.add(-aux, xs[0])

    def test_builder_and_counter_agree(self):
        """Test that storing and counting sinks produce the same tallies."""
        builder = FormulaBuilder()
        counter = ClauseCounter()
        self._emit(builder)
        self._emit(counter)

        assert builder.num_clauses == counter.num_clauses == 5
        assert builder.num_aux == counter.num_aux == 1
        assert builder.groups == counter.groups

    def test_nested_same_name_group_counts_once(self):
        """Test that re-entering a group does not double count."""
        builder = FormulaBuilder()
        self._emit(builder)

        assert builder.groups == {"outer": 4, "inner": 3}

    def test_built_formula_roles(self):
        """Test that the built formula records inputs and auxiliaries."""
        builder = FormulaBuilder()
        self._emit(builder)
        formula = builder.build()

        assert list(formula.input_vars) == [1, 2, 3, 4]
        assert list(formula.aux_vars) == [5]
        assert formula.max_var == 5
        assert formula.clause(0) == (-1, -2)
        assert formula.num_literals == 10

    def test_unallocated_variable_rejected(self):
        """Test that a literal beyond the pool is rejected."""
        builder = FormulaBuilder()
        builder.pool.allocate(2, VarRole.INPUT)
        with pytest.raises(EncodingError, match="unallocated"):
            builder.add(1, 3)


class TestRestriction:
    """Test restriction by partial assignments."""

    def test_restrict_drops_and_shrinks(self):
        """Test that satisfied clauses vanish and false literals are removed."""
        formula = CnfFormula.from_clauses([[1, 2], [-1, 3], [2, 3]])
        restricted = restrict(formula, {1: True, 2: False})

        assert list(restricted.clauses()) == [(3,), (3,)]

    def test_restrict_can_yield_empty_clause(self):
        """Test that a falsified clause becomes empty."""
        formula = CnfFormula.from_clauses([[1, 2]])
        restricted = formula.restrict({1: False, 2: False})

        assert restricted.has_empty_clause()

    def test_restriction_keeps_roles(self):
        """Test that role metadata survives restriction."""
        formula = CnfFormula.from_clauses([[1, 2]], input_vars=[1], aux_vars=[2])
        restricted = formula.restrict({1: True})

        assert list(restricted.input_vars) == [1]
        assert list(restricted.aux_vars) == [2]
        assert len(restricted) == 0


class TestEncoding:
    """Test constraint descriptors and encodings."""

    @pytest.mark.parametrize(
        "text,kind,k",
        [
            ("AMO", ConstraintKind.AMO, 1),
            ("AMK 3", ConstraintKind.AMK, 3),
            ("AMO-INDICATOR", ConstraintKind.AMO_INDICATOR, 1),
            ("unknown", ConstraintKind.UNKNOWN, None),
            ("", ConstraintKind.UNKNOWN, None),
        ],
    )
    def test_parse_constraint(self, text, kind, k):
        """Test parsing the metadata form of constraints."""
        constraint = Constraint.parse(text)
        assert constraint.kind is kind
        assert constraint.k == k

    def test_constraint_round_trips_through_str(self):
        """Test that str() is the metadata form."""
        for constraint in (Constraint.amo(), Constraint.amk(2), Constraint.amo_indicator()):
            assert Constraint.parse(str(constraint)) == constraint

    def test_bad_constraint_rejected(self):
        """Test that garbage constraints raise."""
        with pytest.raises(EncodingError):
            Constraint.parse("AMK two")
        with pytest.raises(EncodingError):
            Constraint.amk(0)

    def test_holds(self):
        """Test constraint evaluation on full assignments."""
        assert Constraint.amk(2).holds([True, True, False])
        assert not Constraint.amk(2).holds([True, True, True])
        indicator = Constraint.amo_indicator()
        assert indicator.holds([False, False, False])
        assert indicator.holds([True, False, True])
        assert not indicator.holds([True, False, False])
        assert not indicator.holds([True, True, True])

    def test_encoding_rejects_bound_above_inputs(self):
        """Test that AMK k must not exceed the input count."""
        formula = CnfFormula.from_clauses([[-1, -2]])
        with pytest.raises(EncodingError, match="outside"):
            Encoding(formula=formula, constraint=Constraint.amk(3), encoder_name="x")

    def test_stats_match_formula(self):
        """Test that stats mirror the formula sizes."""
        formula = CnfFormula.from_clauses([[-1, 3], [-2, 3]], input_vars=[1, 2], aux_vars=[3])
        encoding = Encoding(formula=formula, constraint=Constraint.amo(), encoder_name="x")
        stats = encoding.stats.to_dict()

        assert stats["n"] == 2
        assert stats["clauses"] == 2
        assert stats["aux"] == 1
        assert stats["constraint"] == "AMO"
