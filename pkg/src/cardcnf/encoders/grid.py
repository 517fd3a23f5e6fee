"""Grid compression encoders for AMK.

Inputs sit in a rows x m grid M (input t at row t // m, column t % m). The
occupied columns of M are copied into a rows x ell grid L, where the bound
is enforced with the sequential counter. Column j of M may only land in the
columns H_j of L, given by a set family.

The conjunctive variant (gc) uses explicit copy variables and random 3-sets
with the bounded-transversal property. The disjunctive variant (dgc) copies
each input into some column of H_j and blocks columns of L that more than
one occupied column of M could reach; it needs a (k-1)-cover-free family.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import comb, isqrt
from typing import Any

import galois
import numpy as np

from cardcnf.cnf.encoding import Constraint, Encoding
from cardcnf.cnf.formula import ClauseSink, Literal
from cardcnf.encoders.amk import emit_sequential, sequential_clause_count
from cardcnf.encoders.amo import emit_product, product_clause_count
from cardcnf.encoders.base import check_bound, encode_with
from cardcnf.errors import EncodingError, FamilyError, TransversalError
from cardcnf.families import (
    PrimeField,
    SetFamily,
    build_cover_free_family,
    build_sperner_pairs,
    cover_free_field_size,
    family_capacity,
    reed_solomon_family,
    reed_solomon_points,
    sample_hall_family,
    sperner_degrees,
)
from cardcnf.utils.config import get_config
from cardcnf.utils.intmath import ceil_div, ceil_root, floor_root

logger = logging.getLogger(__name__)

FALLBACK = "sequential"

# Geometric lattice of m values: SEARCH_STEPS points per factor SEARCH_SPAN.
SEARCH_SPAN = 8
SEARCH_STEPS = 24
SEARCH_ELL_WIDTH = 3


@dataclass(frozen=True)
class GridCompressionParams:
    """Shape and hashing family of a grid compression encoding.

    Attributes:
        m: Column count of the input grid M
        ell: Column count of the compressed grid L
        rows: Row count ceil(n / m) shared by M and L
        family: The sets H_j, one per column of M, inside {1..ell}
        source: How the family was built (hall, sperner, reed-solomon)
    """

    m: int
    ell: int
    rows: int
    family: SetFamily
    source: str = ""

    @classmethod
    def build(
        cls, n: int, m: int, ell: int, family: SetFamily, source: str = ""
    ) -> "GridCompressionParams":
        """Params for n inputs with rows = ceil(n / m)."""
        return cls(m=m, ell=ell, rows=ceil_div(n, m), family=family, source=source)

    def validate(self, n: int, k: int) -> list[str]:
        """Check the shape against n inputs and bound k.

        Returns:
            List of validation error messages (empty if valid).
        """
        errors: list[str] = []
        if not k < self.m < n:
            errors.append(f"need k < m < n, got k={k}, m={self.m}, n={n}")
        if not k < self.ell < self.m:
            errors.append(f"need k < ell < m, got k={k}, ell={self.ell}, m={self.m}")
        if self.rows != ceil_div(n, self.m):
            errors.append(f"rows must be ceil(n/m) = {ceil_div(n, self.m)}, got {self.rows}")
        if len(self.family) != self.m:
            errors.append(f"family has {len(self.family)} sets, need m={self.m}")
        if self.family.ground_size > self.ell:
            errors.append(f"family ground set {self.family.ground_size} exceeds ell={self.ell}")
        return errors

    def to_params(self) -> dict[str, Any]:
        params: dict[str, Any] = {"m": self.m, "ell": self.ell, "rows": self.rows}
        if self.source:
            params["family"] = self.source
        return params


def _family_matrix(family: SetFamily) -> np.ndarray | None:
    sizes = {len(s) for s in family.sets}
    if len(sizes) != 1:
        return None
    return np.asarray(family.sets, dtype=np.int64)


def _column_members(family: SetFamily, ell: int) -> list[list[int]]:
    members: list[list[int]] = [[] for _ in range(ell + 1)]
    for j, columns in enumerate(family.sets):
        for p in columns:
            members[p].append(j)
    return members


def _emit_copy_targets(
    sink: ClauseSink,
    x: np.ndarray,
    params: GridCompressionParams,
    l_first: int,
) -> None:
    # (-x | L(row, p) for p in H_j)
    t = np.arange(len(x), dtype=np.int64)
    row_base = l_first + (t // params.m) * params.ell - 1
    matrix = _family_matrix(params.family)
    if matrix is not None:
        targets = row_base[:, None] + matrix[t % params.m]
        sink.add_rows(np.column_stack([-x, targets]))
        return
    for index, lit in enumerate(x.tolist()):
        columns = params.family[index % params.m]
        sink.add_clause([-lit, *(int(row_base[index]) + p for p in columns)])


def _emit_gc(
    sink: ClauseSink, xs: Sequence[Literal], k: int, params: GridCompressionParams
) -> None:
    m, ell, rows = params.m, params.ell, params.rows
    matrix = _family_matrix(params.family)
    if matrix is None:
        raise EncodingError("grid compression needs sets of equal size")
    width = matrix.shape[1]

    l_first = sink.new_block(rows * ell)
    c_first = sink.new_block(m)
    copy_first = sink.new_block(m * width)
    copy = copy_first + np.arange(m * width, dtype=np.int64).reshape(m, width)

    x = np.asarray(xs, dtype=np.int64)
    t = np.arange(len(x), dtype=np.int64)
    column = t % m

    with sink.group("amk"):
        emit_sequential(sink, range(l_first, l_first + rows * ell), k)
    with sink.group("occupancy"):
        sink.add_rows(np.stack([-x, c_first + column], axis=1))
    with sink.group("copy"):
        row_base = l_first + (t // m) * ell - 1
        for position in range(width):
            target = row_base + matrix[column, position]
            sink.add_rows(np.stack([-x, -copy[column, position], target], axis=1))
    with sink.group("obligation"):
        c = c_first + np.arange(m, dtype=np.int64)
        sink.add_rows(np.column_stack([-c, copy]))
    with sink.group("matching"):
        slots: list[list[int]] = [[] for _ in range(ell + 1)]
        for j, columns in enumerate(matrix.tolist()):
            for position, p in enumerate(columns):
                slots[p].append(int(copy[j, position]))
        for p in range(1, ell + 1):
            emit_product(sink, slots[p])


def _emit_dgc(
    sink: ClauseSink, xs: Sequence[Literal], k: int, params: GridCompressionParams
) -> None:
    m, ell, rows = params.m, params.ell, params.rows
    members = _column_members(params.family, ell)
    loaded = [p for p in range(1, ell + 1) if len(members[p]) >= 2]

    l_first = sink.new_block(rows * ell)
    c_first = sink.new_block(m)
    ov_first = sink.new_block(len(loaded))

    x = np.asarray(xs, dtype=np.int64)
    t = np.arange(len(x), dtype=np.int64)

    with sink.group("amk"):
        emit_sequential(sink, range(l_first, l_first + rows * ell), k)
    with sink.group("occupancy"):
        sink.add_rows(np.stack([-x, c_first + t % m], axis=1))
    with sink.group("copy"):
        _emit_copy_targets(sink, x, params, l_first)
    with sink.group("overload"):
        for index, p in enumerate(loaded):
            emit_product(sink, [c_first + j for j in members[p]], guard=ov_first + index)
    with sink.group("exclusion"):
        if loaded:
            columns = np.asarray(loaded, dtype=np.int64)
            ov = ov_first + np.arange(len(loaded), dtype=np.int64)
            cells = l_first + np.arange(rows, dtype=np.int64)[:, None] * ell + columns - 1
            overloads = np.broadcast_to(ov, cells.shape)
            sink.add_rows(np.stack([-cells.reshape(-1), -overloads.reshape(-1)], axis=1))


def hall_params(n: int, k: int) -> tuple[int, int]:
    """Default (m, ell) of the conjunctive encoding: floor((kn^2)^(1/3)), 4 ceil((k^2 n)^(1/3))."""
    return floor_root(k * n * n, 3), 4 * ceil_root(k * k * n, 3)


def emit_grid_compression(
    sink: ClauseSink,
    xs: Sequence[Literal],
    k: int,
    m: int | None = None,
    ell: int | None = None,
    seed: int = 0,
    retries: int = 32,
) -> dict[str, Any]:
    """Emit the conjunctive grid compression encoding of AMK(xs).

    Without overrides m and ell follow hall_params. A family failing the
    transversal check `retries` times doubles ell. When k < ell < m < n
    cannot hold the sequential counter is emitted instead.

    Raises:
        EncodingError: If explicit m/ell violate k < ell < m < n.
    """
    n = len(xs)
    if n <= k:
        return {}
    explicit = m is not None or ell is not None
    default_m, default_ell = hall_params(n, k)
    m = default_m if m is None else m
    ell = default_ell if ell is None else ell

    while True:
        if not (k < ell < m < n):
            if explicit:
                raise EncodingError(f"need k < ell < m < n, got k={k}, ell={ell}, m={m}, n={n}")
            logger.warning(f"GC n={n} k={k}: no feasible grid (m={m}, ell={ell}), using {FALLBACK}")
            emit_sequential(sink, xs, k)
            return {"fallback": FALLBACK}
        try:
            family = sample_hall_family(m, ell, k, seed, retries)
            break
        except TransversalError as e:
            logger.warning(f"GC m={m} ell={ell}: {e}; doubling ell")
            ell *= 2

    params = GridCompressionParams.build(n, m, ell, family, source="hall")
    _emit_gc(sink, xs, k, params)
    logger.debug(f"GC n={n} k={k} m={m} ell={ell}")
    return {**params.to_params(), "seed": seed}


def dgc_clause_count(n: int, k: int, m: int, ell: int, degrees: Sequence[int]) -> int:
    """Clauses of the disjunctive encoding for a family with the given element degrees."""
    rows = ceil_div(n, m)
    loaded = [d for d in degrees[1:] if d >= 2]
    return (
        sequential_clause_count(rows * ell, k)
        + 2 * n
        + sum(product_clause_count(d) for d in loaded)
        + rows * len(loaded)
    )


def disjunctive_family(m: int, ell: int, k: int) -> tuple[SetFamily, str]:
    """The family used for explicit (m, ell): Sperner pairs for k <= 2, else Reed–Solomon.

    For k >= 3, ell must be q*q for a prime q.

    Raises:
        EncodingError: If the family cannot be built.
    """
    try:
        if k <= 2:
            return build_sperner_pairs(m, ell), "sperner"
        q = isqrt(ell)
        if q * q != ell or not galois.is_prime(q):
            raise EncodingError(f"ell must be the square of a prime for k >= 3, got {ell}")
        return reed_solomon_family(q, k, m), "reed-solomon"
    except FamilyError as e:
        raise EncodingError(str(e)) from None


def _lattice_ms(n: int, k: int) -> list[int]:
    centre = math.sqrt(n * k * math.log(n, max(k, 2)))
    values = {
        round(centre * SEARCH_SPAN ** ((i - SEARCH_STEPS) / SEARCH_STEPS))
        for i in range(2 * SEARCH_STEPS + 1)
    }
    if k <= 2:
        low, high = min(values), max(values)
        ell = 3
        while comb(ell, 2) <= high:
            if comb(ell, 2) >= low:
                values.add(comb(ell, 2))
            ell += 1
    return sorted(m for m in values if k < m < n)


def _smallest_pair_ground(m: int) -> int:
    ell = max(2, (1 + isqrt(1 + 8 * m)) // 2)
    while comb(ell, 2) < m:
        ell += 1
    while ell > 2 and comb(ell - 1, 2) >= m:
        ell -= 1
    return ell


@lru_cache(maxsize=64)
def _rs_points(q: int, k: int, count: int) -> np.ndarray:
    return reed_solomon_points(PrimeField(q), k, count)


def _field_size(m: int, k: int, n: int, c: float) -> int | None:
    try:
        return cover_free_field_size(m, k, n, c)
    except FamilyError:
        return None


def grid_search_params(n: int, k: int, c: float | None = None) -> GridCompressionParams:
    """Pick (m, ell) minimizing the disjunctive encoding's exact clause count.

    m ranges over a geometric lattice around sqrt(n k log_k n) (plus exact
    pair counts C(ell, 2) for k <= 2). For k <= 2, ell ranges over the three
    smallest values with C(ell, 2) >= m; for k >= 3, ell = q*q for the field
    size q that cover_free_field_size picks for m sets. Ties go to the
    smallest m, then the smallest ell.

    Args:
        n: Number of inputs.
        k: Bound.
        c: Field size constant for k >= 3 (default from config).

    Raises:
        EncodingError: If no lattice point satisfies k < ell < m < n.
    """
    check_bound(n, k)
    if c is None:
        c = get_config().cover_free_constant
    ms = _lattice_ms(n, k)
    best: tuple[int, int, int] | None = None
    for m in ms:
        if k <= 2:
            start = _smallest_pair_ground(m)
            for ell in range(start, start + SEARCH_ELL_WIDTH):
                if not k < ell < m:
                    continue
                count = dgc_clause_count(n, k, m, ell, sperner_degrees(m, ell))
                best = min(best, (count, m, ell)) if best else (count, m, ell)
        else:
            q = _field_size(m, k, n, c)
            if q is None or not k < q * q < m:
                continue
            points = _rs_points(q, k, min(family_capacity(q, k), ms[-1]))
            degrees = np.bincount(points[:m].reshape(-1), minlength=q * q + 1).tolist()
            count = dgc_clause_count(n, k, m, q * q, degrees)
            best = min(best, (count, m, q * q)) if best else (count, m, q * q)

    if best is None:
        raise EncodingError(f"no feasible grid parameters for n={n}, k={k}")
    count, m, ell = best
    if k <= 2:
        family, source = build_sperner_pairs(m, ell), "sperner"
    else:
        family, source = build_cover_free_family(m, k, n, c), "reed-solomon"
    logger.debug(f"Grid search n={n} k={k}: m={m} ell={ell} clauses={count}")
    return GridCompressionParams.build(n, m, ell, family, source=source)


def emit_disjunctive_grid_compression(
    sink: ClauseSink,
    xs: Sequence[Literal],
    k: int,
    params: GridCompressionParams | None = None,
    m: int | None = None,
    ell: int | None = None,
    c: float | None = None,
) -> dict[str, Any]:
    """Emit the disjunctive grid compression encoding of AMK(xs).

    Without params, explicit m/ell build the family directly; otherwise
    grid_search_params chooses them (c is its field size constant), and the
    sequential counter is emitted when no lattice point exists or none beats it.

    Raises:
        EncodingError: If given params violate their invariants.
    """
    n = len(xs)
    if n <= k:
        return {}
    if params is None and (m is not None or ell is not None):
        if m is None or ell is None:
            raise EncodingError("both m and ell are required")
        family, source = disjunctive_family(m, ell, k)
        params = GridCompressionParams.build(n, m, ell, family, source=source)
    elif params is None:
        try:
            params = grid_search_params(n, k, c)
        except EncodingError as e:
            logger.warning(f"DGC n={n} k={k}: {e}, using {FALLBACK}")
            emit_sequential(sink, xs, k)
            return {"fallback": FALLBACK}
        degrees = params.family.degrees()
        if dgc_clause_count(n, k, params.m, params.ell, degrees) >= sequential_clause_count(n, k):
            logger.info(f"DGC n={n} k={k}: grid does not beat {FALLBACK}, using it")
            emit_sequential(sink, xs, k)
            return {"fallback": FALLBACK}

    errors = params.validate(n, k)
    if errors:
        raise EncodingError("; ".join(errors))
    _emit_dgc(sink, xs, k, params)
    return params.to_params()


def encode_grid_compression(
    xs: Sequence[int],
    k: int,
    m: int | None = None,
    ell: int | None = None,
    seed: int = 0,
    retries: int = 32,
) -> Encoding:
    """Conjunctive grid compression encoding of AMK(xs)."""
    check_bound(len(xs), k)
    return encode_with(
        "gc",
        Constraint.amk(k),
        xs,
        lambda sink, v: emit_grid_compression(sink, v, k, m, ell, seed, retries),
    )


def encode_disjunctive_grid_compression(
    xs: Sequence[int],
    k: int,
    params: GridCompressionParams | None = None,
    c: float | None = None,
) -> Encoding:
    """Disjunctive grid compression encoding of AMK(xs)."""
    check_bound(len(xs), k)
    return encode_with(
        "dgc",
        Constraint.amk(k),
        xs,
        lambda sink, v: emit_disjunctive_grid_compression(sink, v, k, params, c=c),
    )
