"""At-most-k encoders: sequential counter and (disjunctive) generalized product."""

import logging
from collections import defaultdict
from collections.abc import Sequence
from contextlib import nullcontext
from itertools import combinations
from typing import Any

import numpy as np

from cardcnf.cnf.encoding import Constraint, Encoding
from cardcnf.cnf.formula import ClauseSink, Literal
from cardcnf.encoders.amo import emit_product
from cardcnf.encoders.base import check_bound, encode_with
from cardcnf.encoders.layout import drop_digit_keys, rods
from cardcnf.errors import EncodingError
from cardcnf.utils.intmath import ceil_root

logger = logging.getLogger(__name__)

BASE_SEQUENTIAL = "sequential"
BASE_DIRECT = "direct"


def sequential_clause_count(n: int, k: int) -> int:
    """2nk + n - 3k - 1 for n > k, else 0."""
    return 2 * n * k + n - 3 * k - 1 if n > k else 0


def sequential_aux_count(n: int, k: int) -> int:
    """k(n - 1) for n > k, else 0."""
    return k * (n - 1) if n > k else 0


def emit_sequential(sink: ClauseSink, xs: Sequence[Literal], k: int) -> None:
    """Emit the sequential counter for AMK(xs).

    Counter variable s(i, j) means "at least j+1 of x_0..x_i are true" and
    lives at base + i*k + j for i < n-1. Nothing is emitted when n <= k.
    """
    n = len(xs)
    if k < 1:
        raise EncodingError(f"k must be positive, got {k}")
    if n <= k:
        return
    base = sink.new_block(k * (n - 1))
    x = np.asarray(xs, dtype=np.int64)
    s = base + np.arange(n - 1, dtype=np.int64)[:, None] * k + np.arange(k, dtype=np.int64)

    sink.add(-int(x[0]), int(s[0, 0]))
    if k > 1:
        sink.add_rows(-s[0, 1:, None])

    mid = np.arange(1, n - 1)
    if len(mid):
        xm = x[mid]
        sink.add_rows(np.stack([-xm, s[mid, 0]], axis=1))
        sink.add_rows(np.stack([-s[mid - 1, 0], s[mid, 0]], axis=1))
        if k > 1:
            prev = s[mid - 1]
            cur = s[mid]
            xk = np.repeat(xm, k - 1)
            sink.add_rows(
                np.stack([-xk, -prev[:, :-1].reshape(-1), cur[:, 1:].reshape(-1)], axis=1)
            )
            sink.add_rows(np.stack([-prev[:, 1:].reshape(-1), cur[:, 1:].reshape(-1)], axis=1))
        sink.add_rows(np.stack([-xm, -s[mid - 1, k - 1]], axis=1))

    sink.add(-int(x[n - 1]), -int(s[n - 2, k - 1]))


def emit_direct_amk(sink: ClauseSink, xs: Sequence[Literal], k: int) -> None:
    """Forbid every (k+1)-subset of xs with one clause each."""
    for subset in combinations(xs, k + 1):
        sink.add_clause([-x for x in subset])


def _gp_is_base(n: int, k: int, base: str) -> bool:
    if base == BASE_SEQUENTIAL:
        return n < (k + 1) ** (k + 1)
    if base == BASE_DIRECT:
        return n <= (k + 1) ** k
    raise EncodingError(f"unknown base case '{base}'")


def _emit_gp_base(sink: ClauseSink, xs: Sequence[Literal], k: int, base: str) -> None:
    if base == BASE_DIRECT:
        emit_direct_amk(sink, xs, k)
    else:
        emit_sequential(sink, xs, k)


def _emit_projections(
    sink: ClauseSink,
    x: np.ndarray,
    faces: list[tuple[np.ndarray, np.ndarray]],
) -> list[list[int]]:
    face_vars: list[list[int]] = []
    for keys, inverse in faces:
        first = sink.new_block(len(keys))
        sink.add_rows(np.stack([-x, first + inverse], axis=1))
        face_vars.append(list(range(first, first + len(keys))))
    return face_vars


def _emit_gp(sink: ClauseSink, xs: Sequence[Literal], k: int, base: str, top: bool) -> int | None:
    n = len(xs)
    if n <= k:
        return None
    if _gp_is_base(n, k, base):
        _emit_gp_base(sink, xs, k, base)
        return None
    p = ceil_root(n, k + 1)
    points = np.arange(n, dtype=np.int64)
    faces = [rods(points, p, k + 1, d) for d in range(k + 1)]
    if any(len(keys) >= n for keys, _ in faces):
        _emit_gp_base(sink, xs, k, base)
        return None

    x = np.asarray(xs, dtype=np.int64)
    with sink.group("projection") if top else nullcontext():
        face_vars = _emit_projections(sink, x, faces)
    with sink.group("faces") if top else nullcontext():
        for rod_vars in face_vars:
            _emit_gp(sink, rod_vars, k, base, top=False)
    return p


def emit_generalized_product(
    sink: ClauseSink,
    xs: Sequence[Literal],
    k: int,
    base: str = BASE_SEQUENTIAL,
) -> dict[str, Any]:
    """Emit the generalized product encoding of AMK(xs).

    Inputs are points of a (k+1)-dimensional grid of side ceil(n^(1/(k+1))).
    Each input implies the rod through it along every axis, and each of the
    k+1 faces of rods is encoded recursively. With base "sequential" inputs
    below (k+1)^(k+1) use the sequential counter; with base "direct" at most
    (k+1)^k inputs use the direct encoding.
    """
    p = _emit_gp(sink, xs, k, base, top=True)
    params: dict[str, Any] = {"base": base}
    if p is not None:
        params["p"] = p
        logger.debug(f"GP n={len(xs)} k={k} p={p}")
    return params


def emit_disjunctive_generalized_product(
    sink: ClauseSink,
    xs: Sequence[Literal],
    k: int,
) -> dict[str, Any]:
    """Emit the disjunctive generalized product encoding of AMK(xs).

    Face 0 rods get direct projections; the other k faces share one
    disjunctive projection per input. Witness w_d selects the face d whose
    rods must be AMO-free along the matching face-0 rod rows. At most
    (k+1)^k inputs use the sequential counter instead.
    """
    n = len(xs)
    if n <= k:
        return {}
    if n <= (k + 1) ** k:
        emit_sequential(sink, xs, k)
        return {"fallback": BASE_SEQUENTIAL}

    p = ceil_root(n, k + 1)
    points = np.arange(n, dtype=np.int64)
    faces = [rods(points, p, k + 1, d) for d in range(k + 1)]
    firsts = [sink.new_block(len(keys)) for keys, _ in faces]
    witness = sink.new_vars(k)
    face_lits = [first + inverse for first, (_, inverse) in zip(firsts, faces)]

    x = np.asarray(xs, dtype=np.int64)
    with sink.group("projection"):
        sink.add_rows(np.stack([-x, face_lits[0]], axis=1))
        sink.add_rows(np.column_stack([-x, *face_lits[1:]]))

    face_vars = [list(range(first, first + len(keys))) for first, (keys, _) in zip(firsts, faces)]
    with sink.group("faces"):
        for d in range(1, k + 1):
            emit_sequential(sink, face_vars[d], k)

    face0_keys = faces[0][0]
    with sink.group("witness"):
        for d in range(1, k + 1):
            buckets: dict[int, list[int]] = defaultdict(list)
            line_keys = drop_digit_keys(face0_keys, p, k, d - 1)
            for var, key in zip(face_vars[0], line_keys.tolist()):
                buckets[key].append(var)
            for members in buckets.values():
                if len(members) >= 2:
                    emit_product(sink, members, guard=-witness[d - 1])
        emit_product(sink, witness)

    with sink.group("activation"):
        for d in range(1, k + 1):
            rod = np.asarray(face_vars[d], dtype=np.int64)
            sink.add_rows(np.stack([-rod, np.full_like(rod, witness[d - 1])], axis=1))

    logger.debug(f"DGP n={n} k={k} p={p}")
    return {"p": p}


def encode_sequential(xs: Sequence[int], k: int) -> Encoding:
    """Sequential counter encoding of AMK(xs)."""
    check_bound(len(xs), k)
    return encode_with(
        "seqcounter", Constraint.amk(k), xs, lambda sink, v: emit_sequential(sink, v, k)
    )


def encode_generalized_product(xs: Sequence[int], k: int, base: str = BASE_SEQUENTIAL) -> Encoding:
    """Generalized product encoding of AMK(xs)."""
    check_bound(len(xs), k)
    return encode_with(
        "gp", Constraint.amk(k), xs, lambda sink, v: emit_generalized_product(sink, v, k, base)
    )


def encode_disjunctive_generalized_product(xs: Sequence[int], k: int) -> Encoding:
    """Disjunctive generalized product encoding of AMK(xs)."""
    check_bound(len(xs), k)
    return encode_with(
        "dgp",
        Constraint.amk(k),
        xs,
        lambda sink, v: emit_disjunctive_generalized_product(sink, v, k),
    )
