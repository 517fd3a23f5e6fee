"""Random 3-set families whose small subfamilies have transversals."""

import logging
import math
from collections import Counter
from itertools import combinations

import numpy as np

from cardcnf.errors import TransversalError
from cardcnf.families.model import FamilyCheck, SetFamily

logger = logging.getLogger(__name__)

# Above this many sets, 3-uniform families are checked through small unions.
BRUTE_FORCE_LIMIT = 20


def check_bounded_transversal(family: SetFamily, k: int) -> FamilyCheck:
    """Check that every subfamily of at most k sets has distinct representatives.

    By Hall's theorem this holds iff every subfamily F with |F| <= k covers at
    least |F| elements. On failure the witness is a subfamily covering fewer
    elements than it has sets.

    Args:
        family: Family to check.
        k: Largest subfamily size to consider.

    Returns:
        FamilyCheck with the violating subfamily as witness.
    """
    size_limit = min(k, len(family))
    if size_limit <= family.min_set_size:
        return FamilyCheck(True)
    if family.max_set_size == 3 and family.min_set_size == 3 and len(family) > BRUTE_FORCE_LIMIT:
        return _check_three_uniform(family, size_limit)

    masks = family.masks
    for size in range(family.min_set_size + 1, size_limit + 1):
        for subfamily in combinations(range(len(family)), size):
            union = 0
            for index in subfamily:
                union |= masks[index]
            if union.bit_count() < size:
                return FamilyCheck(False, subfamily)
    return FamilyCheck(True)


def _check_three_uniform(family: SetFamily, size_limit: int) -> FamilyCheck:
    # A violation is a set U of u < size_limit elements containing u + 1 members.
    # Every such U extends some member H by u - 3 further elements.
    positions: dict[tuple[int, ...], list[int]] = {}
    for index, members in enumerate(family.sets):
        positions.setdefault(members, []).append(index)
    multiplicity = Counter({members: len(ids) for members, ids in positions.items()})

    for union_size in range(3, size_limit):
        for members in positions:
            others = [e for e in range(1, family.ground_size + 1) if e not in members]
            for extra in combinations(others, union_size - 3):
                union = tuple(sorted(members + extra))
                inside = [t for t in combinations(union, 3) if t in multiplicity]
                if sum(multiplicity[t] for t in inside) > union_size:
                    witness = [i for t in inside for i in positions[t]][: union_size + 1]
                    return FamilyCheck(False, tuple(sorted(witness)))
    return FamilyCheck(True)


def hall_failure_bound(m: int, ell: int, k: int) -> float:
    """Union bound on the probability that a random 3-set family fails the check.

    Subfamilies of at most three 3-sets always have transversals, so the sum
    runs over subfamily sizes 4..k.
    """
    e2 = math.e**2
    return sum((e2 * m * gamma / ell**2) ** gamma for gamma in range(4, k + 1))


def sample_hall_family(
    m: int,
    ell: int,
    k: int,
    seed: int,
    retries: int = 32,
) -> SetFamily:
    """Sample m i.i.d. uniform 3-subsets of {1..ell} passing the k-transversal check.

    Args:
        m: Number of sets.
        ell: Ground set size (at least 3).
        k: Transversal bound checked before returning.
        seed: Seed for numpy's default_rng; the result is deterministic in it.
        retries: Number of families sampled before giving up.

    Returns:
        The first sampled family that passes check_bounded_transversal.

    Raises:
        TransversalError: If no sampled family passes.
    """
    if ell < 3 or m < 1:
        raise TransversalError(f"need ell >= 3 and m >= 1, got ell={ell}, m={m}", attempts=0)

    rng = np.random.default_rng(seed)
    logger.debug(
        f"Sampling Hall family m={m} ell={ell} k={k}, "
        f"failure bound {hall_failure_bound(m, ell, k):.3g}"
    )
    for attempt in range(1, retries + 1):
        sets = [rng.choice(ell, size=3, replace=False) + 1 for _ in range(m)]
        family = SetFamily.of(ell, [s.tolist() for s in sets])
        if check_bounded_transversal(family, k):
            if attempt > 1:
                logger.info(f"Hall family found after {attempt} attempts")
            return family
        logger.warning(f"Hall family attempt {attempt} failed the transversal check")
    raise TransversalError(
        f"no valid family with m={m}, ell={ell}, k={k} in {retries} attempts",
        attempts=retries,
    )
