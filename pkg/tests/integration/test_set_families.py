"""INT-006: Test the set families used for column hashing.

This test verifies that:
1. Set families validate their members against the ground set
2. The bounded-transversal check agrees with brute-force SDR search
3. Hall sampling is seeded and gives up with a TransversalError
4. Reed-Solomon families are cover-free and numbered as documented
5. Sperner pair families and their closed-form degrees agree
"""

from itertools import combinations, product

import numpy as np
import pytest

from cardcnf.errors import FamilyError, TransversalError
from cardcnf.families import (
    PrimeField,
    SetFamily,
    build_cover_free_family,
    build_sperner_pairs,
    check_bounded_transversal,
    check_cover_free,
    cover_free_field_size,
    family_capacity,
    hall_failure_bound,
    polynomial_degree_bound,
    reed_solomon_family,
    sample_hall_family,
    sperner_degrees,
)


def has_representatives(sets):
    """Brute force: pick one element per set, all distinct."""
    return any(len(set(choice)) == len(choice) for choice in product(*sets))


def brute_force_transversal(family, k):
    """Every subfamily of at most k sets has distinct representatives."""
    for size in range(1, min(k, len(family)) + 1):
        for subfamily in combinations(family.sets, size):
            if not has_representatives(subfamily):
                return False
    return True


class TestSetFamily:
    """Test the SetFamily data type."""

    def test_of_sorts_and_deduplicates(self):
        """Test canonical member order."""
        family = SetFamily.of(5, [[3, 1, 3], [5]])
        assert family.sets == ((1, 3), (5,))
        assert family.min_set_size == 1
        assert family.max_set_size == 2

    def test_masks_and_degrees(self):
        """Test bitmask and degree views."""
        family = SetFamily.of(3, [[1, 2], [2, 3]])
        assert family.masks == (0b110, 0b1100)
        assert family.degrees() == [0, 1, 2, 1]

    @pytest.mark.parametrize("sets", [[[1, 4]], [[0, 1]], [[]]])
    def test_invalid_members(self, sets):
        """Test that members outside 1..ground_size or empty sets fail."""
        with pytest.raises(FamilyError):
            SetFamily.of(3, sets)

    def test_truncated(self):
        """Test taking a prefix of the family."""
        family = build_sperner_pairs(6, 4).truncated(2)
        assert family.sets == ((1, 2), (1, 3))
        assert family.ground_size == 4


class TestBoundedTransversal:
    """Test the Hall-condition check."""

    @pytest.mark.parametrize("seed", range(6))
    @pytest.mark.parametrize("k", [4, 5])
    def test_agrees_with_brute_force(self, seed, k):
        """Test random small families against SDR enumeration."""
        rng = np.random.default_rng(seed)
        sets = [(rng.choice(6, size=3, replace=False) + 1).tolist() for _ in range(8)]
        family = SetFamily.of(6, sets)

        assert bool(check_bounded_transversal(family, k)) == brute_force_transversal(family, k)

    def test_mixed_sizes(self):
        """Test a failure among sets of different sizes."""
        family = SetFamily.of(4, [[1], [1, 2], [2], [3, 4]])
        result = check_bounded_transversal(family, 3)

        assert not result
        witness = [family.sets[i] for i in result.witness]
        assert not has_representatives(witness)

    def test_trivial_below_set_size(self):
        """Test that k up to the set size always passes."""
        family = SetFamily.of(3, [[1, 2, 3]] * 10)
        assert check_bounded_transversal(family, 3)

    def test_large_three_uniform_failure(self):
        """Test the union-based path with four copies of one triple."""
        others = list(combinations(range(4, 13), 3))[:21]
        family = SetFamily.of(12, [[1, 2, 3]] * 4 + [list(t) for t in others])
        result = check_bounded_transversal(family, 4)

        assert not result
        assert result.witness == (0, 1, 2, 3)

    @pytest.mark.parametrize("k", [4, 5])
    def test_large_three_uniform_pass(self, k):
        """Test that distinct triples pass up to k = 5."""
        family = SetFamily.of(12, [list(t) for t in list(combinations(range(1, 13), 3))[:25]])
        assert check_bounded_transversal(family, k)


class TestHallSampling:
    """Test random 3-set families."""

    def test_seeded(self):
        """Test that the seed fixes the family."""
        first = sample_hall_family(40, 12, 4, seed=5)
        second = sample_hall_family(40, 12, 4, seed=5)

        assert first == second
        assert len(first) == 40
        assert first.min_set_size == first.max_set_size == 3
        assert first.ground_size == 12
        assert check_bounded_transversal(first, 4)

    def test_gives_up(self):
        """Test the error after the retry limit."""
        with pytest.raises(TransversalError) as exc_info:
            sample_hall_family(10, 3, 4, seed=0, retries=2)
        assert exc_info.value.attempts == 2

    def test_ground_too_small(self):
        """Test that ell < 3 is rejected before sampling."""
        with pytest.raises(TransversalError) as exc_info:
            sample_hall_family(10, 2, 2, seed=0)
        assert exc_info.value.attempts == 0

    def test_failure_bound(self):
        """Test the union bound on failure probability."""
        assert hall_failure_bound(100, 30, 3) == 0
        expected = (np.e**2 * 100 * 4 / 900) ** 4
        assert hall_failure_bound(100, 30, 4) == pytest.approx(expected)


class TestReedSolomon:
    """Test polynomial graph families."""

    def test_degree_bound_and_capacity(self):
        """Test d = ceil(q / (k - 1)) and q^d sets."""
        assert polynomial_degree_bound(5, 3) == 3
        assert polynomial_degree_bound(7, 2) == 7
        assert family_capacity(5, 3) == 125
        with pytest.raises(FamilyError):
            polynomial_degree_bound(5, 1)

    def test_point_numbering(self):
        """Test that (x, f(x)) is numbered x*q + f(x) + 1."""
        family = reed_solomon_family(3, 2)
        assert len(family) == 27
        assert family.ground_size == 9
        assert family.sets[0] == (1, 4, 7)
        assert family.sets[1] == (1, 5, 8)

    @pytest.mark.parametrize("q,k,count", [(3, 2, None), (5, 3, 40)])
    def test_cover_free(self, q, k, count):
        """Test (k-1)-cover-freeness exhaustively."""
        family = reed_solomon_family(q, k, count)
        assert check_cover_free(family, k)
        assert len(set(family.sets)) == len(family)

    def test_cover_free_failure(self):
        """Test that a covered set is reported first in the witness."""
        family = SetFamily.of(3, [[1, 2], [2, 3], [1, 3]])
        result = check_cover_free(family, 3)
        assert not result
        assert result.witness == (0, 1, 2)

    def test_capacity_exceeded(self):
        """Test that asking for too many sets fails."""
        with pytest.raises(FamilyError, match="only 9 sets"):
            reed_solomon_family(3, 3, 10)

    def test_non_prime_field(self):
        """Test that only prime fields are accepted."""
        with pytest.raises(FamilyError, match="not prime"):
            PrimeField(4)

    def test_build_for_target(self):
        """Test the field choice of the cover-free builder."""
        family = build_cover_free_family(100, 3, 1000, c=0.5)
        assert len(family) == 100
        assert family.max_set_size == 11
        assert family.ground_size == 121
        assert check_cover_free(family.truncated(30), 3)

    def test_field_size_rule(self):
        """Test the smallest prime at or above 2 * k * ceil(log_k n)."""
        # ceil(log_3 200000) = 12, so q >= 72.
        assert cover_free_field_size(1000, 3, 200_000) == 73
        assert cover_free_field_size(1000, 3, 200_000, c=1.0) == 37

    def test_field_size_grows_with_target(self):
        """Test that capacity can force a larger prime."""
        assert cover_free_field_size(125, 3, 2, c=0.1) == 5
        assert cover_free_field_size(126, 3, 2, c=0.1) == 7

    def test_field_size_errors(self):
        """Test infeasible field size requests."""
        with pytest.raises(FamilyError, match="no prime field up to 20"):
            cover_free_field_size(10**30, 3, 10, max_q=20)
        with pytest.raises(FamilyError, match="must be positive"):
            cover_free_field_size(10, 3, 10, c=0)


class TestSperner:
    """Test pair families."""

    def test_first_pairs(self):
        """Test lexicographic order."""
        family = build_sperner_pairs(5, 4)
        assert family.sets == ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4))
        assert check_cover_free(family, 2)

    @pytest.mark.parametrize("m,ell", [(1, 2), (5, 4), (6, 4), (10, 6), (37, 10)])
    def test_degrees_closed_form(self, m, ell):
        """Test degrees without building the family."""
        assert sperner_degrees(m, ell) == build_sperner_pairs(m, ell).degrees()

    def test_too_few_pairs(self):
        """Test that C(ell, 2) must reach m."""
        with pytest.raises(FamilyError):
            build_sperner_pairs(7, 4)
        with pytest.raises(FamilyError):
            sperner_degrees(7, 4)
