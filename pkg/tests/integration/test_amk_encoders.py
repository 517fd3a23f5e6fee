"""INT-004: Test the at-most-k encoders.

This test verifies that:
1. The sequential counter has its closed-form size for every n and k
2. Generalized product recursion and base cases follow n and k
3. Disjunctive generalized product falls back below (k+1)^k inputs
4. Every AMK encoder is satisfiable exactly on weight <= k
5. Counting mode reports the same sizes as building
"""

import pytest

from cardcnf.cnf import Constraint
from cardcnf.encoders import (
    BASE_DIRECT,
    BASE_SEQUENTIAL,
    build_encoding,
    count_encoding,
    encode_disjunctive_generalized_product,
    encode_generalized_product,
    encode_sequential,
    sequential_aux_count,
    sequential_clause_count,
)
from cardcnf.errors import EncodingError
from cardcnf.verify import Strategy, check_encoding_correct, check_propagation_complete


class TestSequentialCounter:
    """Test the sequential counter."""

    @pytest.mark.parametrize("n", [10, 1000, 100_000])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_closed_form(self, n, k):
        """Test 2nk + n - 3k - 1 clauses and k(n - 1) auxiliaries."""
        stats = count_encoding("seqcounter", n, k)
        assert stats.num_clauses == 2 * n * k + n - 3 * k - 1
        assert stats.num_aux == k * (n - 1)
        assert stats.num_clauses == sequential_clause_count(n, k)
        assert stats.num_aux == sequential_aux_count(n, k)

    def test_built_formula_matches_count(self):
        """Test that building stores exactly the counted clauses."""
        encoding = encode_sequential(range(1, 31), 3)
        assert encoding.num_clauses == sequential_clause_count(30, 3)
        assert encoding.formula.max_var == 30 + sequential_aux_count(30, 3)

    @pytest.mark.parametrize("n,k", [(2, 1), (8, 1), (8, 3), (12, 2), (12, 5)])
    def test_exhaustively_correct(self, n, k):
        """Test equivalence with AMK over all input assignments."""
        assert check_encoding_correct(encode_sequential(range(1, n + 1), k))

    def test_propagation_complete(self):
        """Test that random prefixes propagate completely."""
        encoding = build_encoding("seqcounter", 20, 2)
        assert check_propagation_complete(encoding, prefixes=300)

    @pytest.mark.parametrize("n,k", [(5, 0), (5, 5), (3, 7)])
    def test_bound_out_of_range(self, n, k):
        """Test that k must satisfy 1 <= k < n."""
        with pytest.raises(EncodingError, match="k out of range"):
            encode_sequential(range(1, n + 1), k)


class TestGeneralizedProduct:
    """Test the generalized product encoding."""

    def test_sequential_base_below_threshold(self):
        """Test that fewer than (k+1)^(k+1) inputs use the counter."""
        encoding = encode_generalized_product(range(1, 27), 2)
        assert encoding.params == {"base": BASE_SEQUENTIAL}
        assert encoding.num_clauses == sequential_clause_count(26, 2)

    def test_recursion_above_threshold(self):
        """Test that 27 inputs recurse on a side-3 cube."""
        encoding = encode_generalized_product(range(1, 28), 2)
        assert encoding.params == {"base": BASE_SEQUENTIAL, "p": 3}
        assert encoding.groups["projection"] == 27 * 3

    def test_direct_base(self):
        """Test the direct base case threshold (k+1)^k."""
        below = encode_generalized_product(range(1, 10), 2, base=BASE_DIRECT)
        above = encode_generalized_product(range(1, 11), 2, base=BASE_DIRECT)
        assert "p" not in below.params
        assert below.num_clauses == 84
        assert above.params["p"] == 3

    def test_unknown_base_rejected(self):
        """Test that the base case name is checked."""
        with pytest.raises(EncodingError, match="base"):
            encode_generalized_product(range(1, 60), 2, base="ladder")

    def test_registry_base_param(self):
        """Test the base param through the registry."""
        encoding = build_encoding("gp", 12, 2, {"base": "direct"})
        assert encoding.params["base"] == BASE_DIRECT
        with pytest.raises(EncodingError, match="must be one of"):
            build_encoding("gp", 12, 2, {"base": "ladder"})

    @pytest.mark.parametrize(
        "n,k,base",
        [
            (12, 1, BASE_SEQUENTIAL),
            (12, 2, BASE_DIRECT),
            (10, 1, BASE_DIRECT),
            (13, 2, BASE_DIRECT),
        ],
    )
    def test_exhaustively_correct(self, n, k, base):
        """Test equivalence with AMK at recursing sizes."""
        encoding = encode_generalized_product(range(1, n + 1), k, base)
        assert "p" in encoding.params
        assert check_encoding_correct(encoding)


class TestDisjunctiveGeneralizedProduct:
    """Test the disjunctive generalized product encoding."""

    def test_fallback_at_small_sizes(self):
        """Test that at most (k+1)^k inputs use the counter."""
        encoding = encode_disjunctive_generalized_product(range(1, 10), 2)
        assert encoding.params == {"fallback": BASE_SEQUENTIAL}
        assert encoding.num_clauses == sequential_clause_count(9, 2)

    def test_groups(self):
        """Test the clause groups of a recursing encoding."""
        encoding = encode_disjunctive_generalized_product(range(1, 101), 2)
        assert encoding.params == {"p": 5}
        assert encoding.groups["projection"] == 200
        assert set(encoding.groups) == {"projection", "faces", "witness", "activation"}
        assert sum(encoding.groups.values()) == encoding.num_clauses

    @pytest.mark.parametrize("n,k", [(3, 1), (12, 1), (12, 2), (13, 2)])
    def test_exhaustively_correct(self, n, k):
        """Test equivalence with AMK."""
        assert check_encoding_correct(encode_disjunctive_generalized_product(range(1, n + 1), k))

    def test_fewer_clauses_than_generalized_product(self):
        """Test the size advantage at scale."""
        dgp = count_encoding("dgp", 100_000, 2)
        gp = count_encoding("gp", 100_000, 2)
        assert dgp.num_clauses < gp.num_clauses


class TestWeightWindow:
    """Check larger encodings on light and random heavy assignments."""

    @pytest.mark.parametrize("name", ["seqcounter", "gp", "dgp", "dgc"])
    def test_window_agrees(self, name):
        """Test the weight window up to k+2 plus heavy samples."""
        encoding = build_encoding(name, 40, 2)
        report = check_encoding_correct(
            encoding,
            Strategy.WEIGHT_WINDOW,
            window_limit=3000,
            random_samples=30,
            seed=7,
        )
        assert report.passed, report.to_dict(encoding.input_vars)
        assert report.strategy is Strategy.WEIGHT_WINDOW


class TestCountingMode:
    """Counting and building run the same emitters."""

    @pytest.mark.parametrize(
        "name,n,k",
        [("seqcounter", 50, 3), ("gp", 200, 2), ("dgp", 200, 2), ("dgc", 300, 2), ("gc", 300, 2)],
    )
    def test_count_equals_build(self, name, n, k):
        """Test identical sizes, groups and params."""
        built = build_encoding(name, n, k)
        counted = count_encoding(name, n, k)
        assert built.num_clauses == counted.num_clauses
        assert built.num_aux == counted.num_aux
        assert built.groups == counted.groups
        assert built.params == counted.params

    def test_default_bound_is_one(self):
        """Test that AMK encoders default to k = 1."""
        assert build_encoding("seqcounter", 6).constraint == Constraint.amk(1)
