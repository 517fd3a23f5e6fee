"""INT-009: Test the benchmark instance families.

This test verifies that:
1. Variant names map to family parameters
2. Infeasible parameters are rejected before generation
3. Generated instances have the documented structure
4. The expected status matches the solver on small instances
5. Instance metadata survives a DIMACS round trip
"""

import pytest
from pydantic import ValidationError

from cardcnf.cnf import read_comments, write_formula
from cardcnf.errors import EncodingError, InstanceError
from cardcnf.instances import (
    SUBSET_SIZE,
    VARIANTS,
    FamilyName,
    InstanceSpec,
    Status,
    gen_family_d,
    gen_family_l,
    gen_family_m,
    generate_instance,
)
from cardcnf.verify import solve


class TestInstanceSpec:
    """Test instance parameters."""

    def test_variants(self):
        """Test the variant list."""
        assert VARIANTS == ("L", "L-sat", "M", "M-sat", "D")

    @pytest.mark.parametrize(
        "variant,family,satisfiable",
        [("L", FamilyName.L, False), ("L-sat", FamilyName.L, True), ("D", FamilyName.D, False)],
    )
    def test_size_as_n(self, variant, family, satisfiable):
        """Test variants indexed by n."""
        spec = InstanceSpec.from_variant(variant, 40, k=3)
        assert spec.family is family
        assert spec.n == 40
        assert spec.k == 3
        assert spec.satisfiable is satisfiable
        assert spec.size == 40

    def test_machines_variant(self):
        """Test that M uses k * size + 1 jobs and M-sat k * size."""
        unsat = InstanceSpec.from_variant("M", 5, k=2)
        sat = InstanceSpec.from_variant("M-sat", 5, k=2)
        assert (unsat.machines, unsat.capacity, unsat.jobs) == (5, 5, 11)
        assert sat.jobs == 10
        assert unsat.size == 5

    def test_unknown_variant(self):
        """Test that unknown variants raise InstanceError."""
        with pytest.raises(InstanceError, match="unknown family variant"):
            InstanceSpec.from_variant("Q", 10)

    def test_field_validation(self):
        """Test pydantic bounds on k and n."""
        with pytest.raises(ValidationError):
            InstanceSpec(family=FamilyName.L, n=40, k=0)
        with pytest.raises(ValidationError):
            InstanceSpec(family="X", n=40)

    def test_frozen(self):
        """Test that specs are immutable."""
        spec = InstanceSpec.from_variant("L", 40)
        with pytest.raises(ValidationError):
            spec.n = 50

    @pytest.mark.parametrize(
        "spec,fragment",
        [
            (InstanceSpec(family=FamilyName.L, n=25, k=2), "n >= 30"),
            (InstanceSpec(family=FamilyName.L), "needs n"),
            (
                InstanceSpec(family=FamilyName.M, machines=1, jobs=3, capacity=1, k=2),
                "machines >= k",
            ),
            (InstanceSpec(family=FamilyName.M, machines=3), "needs machines, jobs and capacity"),
            (InstanceSpec(family=FamilyName.D, n=3, k=1), "k >= 2"),
        ],
    )
    def test_infeasible(self, spec, fragment):
        """Test feasibility checks and the generator's refusal."""
        assert any(fragment in e for e in spec.validate_feasible())
        with pytest.raises(InstanceError, match=fragment):
            generate_instance(spec)


class TestFamilyL:
    """Test disjoint positive clauses under at-most-k."""

    def test_subsets(self):
        """Test that subsets are disjoint 10-sets of the inputs."""
        instance = gen_family_l(InstanceSpec.from_variant("L", 60, k=3, seed=4))
        subsets = instance.details["subsets"]

        assert len(subsets) == 4
        assert all(len(s) == SUBSET_SIZE for s in subsets)
        flat = [v for s in subsets for v in s]
        assert len(set(flat)) == len(flat)
        assert all(1 <= v <= 60 for v in flat)
        assert instance.expected is Status.UNSAT
        assert instance.base_vars == 60

    def test_seeded(self):
        """Test that the seed fixes the instance."""
        first = gen_family_l(InstanceSpec.from_variant("L", 50, seed=9))
        second = gen_family_l(InstanceSpec.from_variant("L", 50, seed=9))
        other = gen_family_l(InstanceSpec.from_variant("L", 50, seed=10))

        assert first.details == second.details
        assert first.formula.clause_multiset() == second.formula.clause_multiset()
        assert first.details != other.details

    def test_satisfiable_variant(self):
        """Test that L-sat adds only k subsets and is satisfiable."""
        instance = gen_family_l(InstanceSpec.from_variant("L-sat", 50, k=2))
        assert len(instance.details["subsets"]) == 2
        assert instance.expected is Status.SAT
        assert solve(instance.formula).satisfiable

    def test_unsatisfiable_variant(self):
        """Test that k + 1 disjoint subsets cannot all be hit."""
        instance = gen_family_l(InstanceSpec.from_variant("L", 30, k=2))
        assert not solve(instance.formula).satisfiable

    @pytest.mark.parametrize("encoder", ["gp", "dgp"])
    def test_encoder_under_test(self, encoder):
        """Test that the chosen encoder supplies the at-most-k clauses."""
        plain = gen_family_l(InstanceSpec.from_variant("L", 200, encoder="seqcounter"))
        other = gen_family_l(InstanceSpec.from_variant("L", 200, encoder=encoder))
        assert other.details == plain.details
        assert len(other.formula) != len(plain.formula)

    def test_amo_encoder_needs_k_one(self):
        """Test that AMO encoders only serve k = 1."""
        instance = gen_family_l(InstanceSpec.from_variant("L", 40, k=1, encoder="product"))
        assert len(instance.details["subsets"]) == 2
        with pytest.raises(EncodingError, match="at-most-one"):
            gen_family_l(InstanceSpec.from_variant("L", 40, k=2, encoder="product"))


class TestFamilyM:
    """Test machines and jobs."""

    def test_structure(self):
        """Test variable layout and the per-job clauses."""
        instance = gen_family_m(InstanceSpec.from_variant("M", 3, k=2))
        assert instance.base_vars == 3 * 7 + 3
        assert instance.details == {}
        # job 1 on machines 1..3 is x(1,1), x(2,1), x(3,1)
        assert instance.formula.clause(0) == (1, 8, 15)
        assert instance.formula.clause(6) == (7, 14, 21)
        assert instance.formula.clause(7) == (-1, 22)

    @pytest.mark.parametrize("variant,status", [("M", Status.UNSAT), ("M-sat", Status.SAT)])
    def test_status(self, variant, status):
        """Test jobs > k * capacity against the solver."""
        instance = generate_instance(InstanceSpec.from_variant(variant, 3, k=2))
        assert instance.expected is status
        assert solve(instance.formula).satisfiable == (status is Status.SAT)


class TestFamilyD:
    """Test the layered DAG."""

    def test_layers(self):
        """Test layer sizes and the source unit clause."""
        instance = gen_family_d(InstanceSpec.from_variant("D", 4, k=3))
        layers = instance.details["layers"]

        assert [len(layer) for layer in layers] == [1, 4, 4, 1]
        assert instance.formula.clause(0) == (1,)
        assert instance.base_vars == 10
        assert instance.expected is Status.UNSAT

    def test_unsatisfiable(self):
        """Test that the forced path exceeds k."""
        instance = gen_family_d(InstanceSpec.from_variant("D", 3, k=2))
        assert not solve(instance.formula).satisfiable

    def test_wrong_family(self):
        """Test that generators check the family."""
        with pytest.raises(InstanceError, match="family D spec"):
            gen_family_d(InstanceSpec.from_variant("L", 40))


class TestMetadata:
    """Test instance comments."""

    @pytest.mark.parametrize(
        "variant,label,expected",
        [
            ("L", "L", "UNSAT"),
            ("L-sat", "L-sat", "SAT"),
            ("M-sat", "M-sat", "SAT"),
            ("D", "D", "UNSAT"),
        ],
    )
    def test_comments(self, variant, label, expected):
        """Test the family label and expected status."""
        size = 4 if variant.startswith("M") else 30
        instance = generate_instance(InstanceSpec.from_variant(variant, size, seed=2))
        comments = instance.comments()
        assert comments["family"] == label
        assert comments["expected"] == expected
        assert comments["seed"] == 2
        assert comments["size"] == size

    def test_round_trip(self, tmp_path):
        """Test that comments are readable from the written file."""
        instance = generate_instance(InstanceSpec.from_variant("L-sat", 40, seed=1))
        path = tmp_path / "l.cnf"
        write_formula(instance.formula, path, instance.comments())

        comments = read_comments(path)
        assert comments["expected"] == "SAT"
        assert comments["family"] == "L-sat"
        assert comments["encoder"] == "seqcounter"
