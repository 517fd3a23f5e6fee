"""Sperner families of distinct 2-sets."""

from itertools import combinations, islice
from math import comb

from cardcnf.errors import FamilyError
from cardcnf.families.model import SetFamily


def build_sperner_pairs(m: int, ell: int) -> SetFamily:
    """The first m 2-subsets of {1..ell} in lexicographic order.

    Distinct sets of equal size never contain each other, so the result is
    1-cover-free.

    Raises:
        FamilyError: If C(ell, 2) < m.
    """
    if comb(ell, 2) < m:
        raise FamilyError(f"ell={ell} gives only {comb(ell, 2)} pairs, need {m}")
    pairs = islice(combinations(range(1, ell + 1), 2), m)
    return SetFamily(ell, tuple(pairs))


def sperner_degrees(m: int, ell: int) -> list[int]:
    """Element degrees of build_sperner_pairs(m, ell) without building it.

    Returns:
        List indexed by element (index 0 unused).
    """
    if comb(ell, 2) < m:
        raise FamilyError(f"ell={ell} gives only {comb(ell, 2)} pairs, need {m}")
    degrees = [0] * (ell + 2)
    shift = [0] * (ell + 2)
    remaining = m
    first = 1
    while remaining > 0:
        taken = min(remaining, ell - first)
        degrees[first] += taken
        # partners first+1 .. first+taken
        shift[first + 1] += 1
        shift[first + taken + 1] -= 1
        remaining -= taken
        first += 1
    running = 0
    for element in range(1, ell + 1):
        running += shift[element]
        degrees[element] += running
    return degrees[: ell + 1]
