"""INT-014: Test emitted sizes against the published at-most-2 counts.

This test verifies that:
1. The sequential counter matches its closed forms and the published rows exactly
2. GP, DGP and DGC clause counts are within 10% of the published rows
3. DGC < DGP < GP < sequential counter at every published size tested
"""

import pytest

from cardcnf.bench import compare, reference_counts
from cardcnf.encoders import count_encoding, sequential_clause_count

SIZES = [200_000, 1_000_000, 3_000_000]
TOLERANCE = 0.10


@pytest.fixture(scope="module")
def counts():
    """Emitted clause counts per (encoder, n), computed once."""
    return {
        (name, n): count_encoding(name, n, 2)
        for name in ("seqcounter", "gp", "dgp", "dgc")
        for n in SIZES
    }


class TestSequentialCounter:
    """Test exact counter sizes."""

    @pytest.mark.parametrize("n", [10, 1000, 100_000])
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_closed_forms(self, n, k):
        """Test 2nk + n - 3k - 1 clauses and k(n - 1) auxiliaries."""
        stats = count_encoding("seqcounter", n, k)
        assert stats.num_clauses == 2 * n * k + n - 3 * k - 1
        assert stats.num_aux == k * (n - 1)

    @pytest.mark.parametrize("n", SIZES)
    def test_published_rows(self, counts, n):
        """Test exact agreement with the published rows."""
        stats = counts[("seqcounter", n)]
        ref = reference_counts("seqcounter", n)
        assert (stats.num_clauses, stats.num_aux) == (ref.clauses, ref.aux)


class TestTolerance:
    """Test the compact encoders against the published rows."""

    @pytest.mark.parametrize("n", SIZES)
    @pytest.mark.parametrize("name", ["gp", "dgp", "dgc"])
    def test_clause_counts(self, counts, name, n):
        """Test relative clause deviation."""
        stats = counts[(name, n)]
        row = compare(name, n, stats.num_clauses, stats.num_aux)
        assert abs(row["clause_deviation"]) <= TOLERANCE, row

    @pytest.mark.parametrize("n", SIZES)
    def test_ordering(self, counts, n):
        """Test DGC < DGP < GP < sequential counter."""
        sizes = [counts[(name, n)].num_clauses for name in ("dgc", "dgp", "gp", "seqcounter")]
        assert sizes == sorted(sizes)
        assert len(set(sizes)) == 4

    def test_searched_grid_near_published(self, counts):
        """Test the searched DGC shape at n = 200000."""
        stats = counts[("dgc", 200_000)]
        assert stats.num_clauses <= 460_000
        assert stats.num_clauses < sequential_clause_count(200_000, 2)
        assert {"m", "ell", "rows", "family"} <= set(stats.params)
