"""Reed–Solomon cover-free families.

The family for prime q and bound k consists of the graphs
{(x, f(x)) : x in GF(q)} of all polynomials f of degree below
d = ceil(q / (k - 1)). Two distinct graphs share fewer than d points, so no
graph is covered by k - 1 others. Point (x, y) is numbered x*q + y + 1.
"""

import logging
import math
from itertools import combinations

import galois
import numpy as np

from cardcnf.errors import FamilyError
from cardcnf.families.model import FamilyCheck, PrimeField, SetFamily
from cardcnf.utils.intmath import ceil_div, ceil_log

logger = logging.getLogger(__name__)

MAX_FIELD_SIZE = 1_000
DEFAULT_FIELD_CONSTANT = 2.0


def polynomial_degree_bound(q: int, k: int) -> int:
    """Number of coefficients d = ceil(q / (k - 1)) for bound k >= 2."""
    if k < 2:
        raise FamilyError(f"cover-free families need k >= 2, got {k}")
    return ceil_div(q, k - 1)


def family_capacity(q: int, k: int) -> int:
    """Number of sets available for field size q: q ** d."""
    return q ** polynomial_degree_bound(q, k)


def reed_solomon_family(q: int, k: int, count: int | None = None) -> SetFamily:
    """Build the first `count` polynomial graphs over GF(q).

    Polynomials are enumerated by coefficient vector in lexicographic order,
    constant coefficient most significant.

    Args:
        q: Prime field size.
        k: Cover-free bound; the family is (k-1)-cover-free.
        count: Number of sets (default: all q ** d).

    Returns:
        SetFamily over {1..q*q} with sets of exactly q elements.

    Raises:
        FamilyError: If q is not prime or count exceeds the capacity.
    """
    field = PrimeField(q)
    d = polynomial_degree_bound(q, k)
    capacity = q**d
    if count is None:
        count = capacity
    if count > capacity:
        raise FamilyError(f"GF({q}) with degree < {d} yields only {capacity} sets, need {count}")

    points = reed_solomon_points(field, k, count)
    logger.debug(f"Built Reed-Solomon family q={q} k={k} d={d} count={count}")
    return SetFamily(q * q, tuple(map(tuple, points.tolist())))


def reed_solomon_points(field: PrimeField, k: int, count: int) -> np.ndarray:
    """Element matrix of the first `count` polynomial graphs, one row per set."""
    q = field.q
    d = polynomial_degree_bound(q, k)
    index = np.arange(count, dtype=np.int64)
    coefficients = np.zeros((count, d), dtype=np.int64)
    for j in range(d):
        weight = q ** (d - 1 - j)
        if weight < count:
            coefficients[:, j] = (index // weight) % q

    gf = field.gf
    vandermonde = gf(np.array([[pow(x, i, q) for x in range(q)] for i in range(d)]))
    values = (gf(coefficients) @ vandermonde).view(np.ndarray).astype(np.int64)
    return np.arange(q, dtype=np.int64) * q + values + 1


def cover_free_field_size(
    target_m: int,
    k: int,
    n: int,
    c: float = DEFAULT_FIELD_CONSTANT,
    max_q: int = MAX_FIELD_SIZE,
) -> int:
    """Field size for a Reed–Solomon family of target_m sets.

    The smallest prime q >= max(k + 1, c * k * ceil(log_k n)) whose capacity
    q ** ceil(q / (k - 1)) reaches target_m.

    Raises:
        FamilyError: If k < 2, c is not positive, or no such prime exists up to max_q.
    """
    if k < 2:
        raise FamilyError(f"cover-free families need k >= 2, got {k}")
    if c <= 0:
        raise FamilyError(f"field size constant must be positive, got {c}")
    log_term = ceil_log(max(n, 2), k)
    q = max(k + 1, math.ceil(c * k * log_term))
    if not galois.is_prime(q):
        q = galois.next_prime(q)
    while q <= max_q and family_capacity(q, k) < target_m:
        q = galois.next_prime(q)
    if q > max_q:
        raise FamilyError(f"no prime field up to {max_q} yields {target_m} sets for k={k}")
    return q


def build_cover_free_family(
    target_m: int,
    k: int,
    n: int,
    c: float = DEFAULT_FIELD_CONSTANT,
    max_q: int = MAX_FIELD_SIZE,
) -> SetFamily:
    """Build a (k-1)-cover-free family of at least target_m sets.

    The field size comes from cover_free_field_size.

    Raises:
        FamilyError: If no such prime exists up to max_q.
    """
    q = cover_free_field_size(target_m, k, n, c, max_q)
    logger.info(f"Cover-free family for m={target_m} k={k} n={n}: q={q}")
    return reed_solomon_family(q, k, target_m)


def check_cover_free(family: SetFamily, k: int) -> FamilyCheck:
    """Check that no set is contained in the union of k - 1 other sets.

    Exhaustive over all choices; for test-scale families.

    Returns:
        FamilyCheck whose witness lists the covered set then the covering sets.
    """
    masks = family.masks
    indices = range(len(family))
    for covered in indices:
        others = [i for i in indices if i != covered]
        for cover in combinations(others, k - 1):
            union = 0
            for index in cover:
                union |= masks[index]
            if masks[covered] & ~union == 0:
                return FamilyCheck(False, (covered, *cover))
    return FamilyCheck(True)
