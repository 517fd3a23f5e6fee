"""At-most-one encoders: direct, product and the indicator variant.

`emit_*` functions write clauses into a ClauseSink and return the params
they chose. `encode_*` functions wrap them into an Encoding over the given
input variables.
"""

import logging
from collections.abc import Sequence
from functools import lru_cache
from math import comb
from typing import Any

import numpy as np

from cardcnf.cnf.encoding import Constraint, Encoding
from cardcnf.cnf.formula import ClauseSink, Literal
from cardcnf.encoders.base import encode_with
from cardcnf.encoders.layout import product_grid
from cardcnf.errors import EncodingError

logger = logging.getLogger(__name__)

# Largest input count handled by the direct encoding inside the product recursion.
PRODUCT_BASE = 4


def emit_direct(sink: ClauseSink, xs: Sequence[Literal], guard: Literal | None = None) -> None:
    """Emit (-xi | -xj) for all i < j, each extended by `guard` if given."""
    n = len(xs)
    if n < 2:
        return
    lits = np.asarray(xs, dtype=np.int64)
    i, j = np.triu_indices(n, k=1)
    rows = np.stack([-lits[i], -lits[j]], axis=1)
    if guard is not None:
        rows = np.hstack([rows, np.full((rows.shape[0], 1), guard, dtype=np.int64)])
    sink.add_rows(rows)


def emit_product(sink: ClauseSink, xs: Sequence[Literal], guard: Literal | None = None) -> None:
    """Emit the recursive product encoding of AMO(xs).

    Inputs fill a grid of width ceil(sqrt(n)) row by row; each input implies
    its row and column variable and the encoding recurses on both. At most
    PRODUCT_BASE inputs use the direct encoding. A guard literal is added to
    the direct-encoding clauses only, which yields (guard | AMO(xs)).
    """
    n = len(xs)
    if n <= PRODUCT_BASE:
        emit_direct(sink, xs, guard)
        return
    rows, cols = _emit_product_grid(sink, xs)
    emit_product(sink, rows, guard)
    emit_product(sink, cols, guard)


def _emit_product_grid(sink: ClauseSink, xs: Sequence[Literal]) -> tuple[list[int], list[int]]:
    grid = product_grid(len(xs))
    row_vars = sink.new_vars(grid.rows)
    col_vars = sink.new_vars(grid.width)
    lits = np.asarray(xs, dtype=np.int64)
    t = np.arange(len(xs))
    row_of = np.asarray(row_vars, dtype=np.int64)[t // grid.width]
    col_of = np.asarray(col_vars, dtype=np.int64)[t % grid.width]
    sink.add_rows(np.stack([-lits, row_of], axis=1))
    sink.add_rows(np.stack([-lits, col_of], axis=1))
    return row_vars, col_vars


@lru_cache(maxsize=None)
def product_clause_count(n: int) -> int:
    """Clauses emitted by emit_product on n inputs."""
    if n <= PRODUCT_BASE:
        return comb(n, 2)
    grid = product_grid(n)
    return 2 * n + product_clause_count(grid.rows) + product_clause_count(grid.width)


@lru_cache(maxsize=None)
def product_aux_count(n: int) -> int:
    """Auxiliary variables allocated by emit_product on n inputs."""
    if n <= PRODUCT_BASE:
        return 0
    grid = product_grid(n)
    return grid.rows + grid.width + product_aux_count(grid.rows) + product_aux_count(grid.width)


def emit_amo_prime(sink: ClauseSink, xs: Sequence[Literal], z: Literal) -> None:
    """Emit AMO(xs) together with (-x | z) for every x, through the product rows.

    Beyond PRODUCT_BASE inputs each row variable implies z, so z follows from
    any true input by unit propagation in two steps.
    """
    if len(xs) <= PRODUCT_BASE:
        emit_direct(sink, xs)
        for x in xs:
            sink.add(-x, z)
        return
    rows, cols = _emit_product_grid(sink, xs)
    emit_product(sink, rows)
    emit_product(sink, cols)
    for r in rows:
        sink.add(-r, z)


def encode_direct(xs: Sequence[int]) -> Encoding:
    """Pairwise AMO encoding: C(n, 2) clauses, no auxiliaries."""
    return encode_with("direct", Constraint.amo(), xs, lambda sink, v: emit_direct(sink, v))


def encode_product(xs: Sequence[int]) -> Encoding:
    """Recursive grid (product) AMO encoding."""

    def emit(sink: ClauseSink, v: Sequence[int]) -> dict[str, Any]:
        emit_product(sink, v)
        return {"p": product_grid(len(v)).width} if len(v) > PRODUCT_BASE else {}

    return encode_with("product", Constraint.amo(), xs, emit)


def encode_amo_prime(xs: Sequence[int], z: int) -> Encoding:
    """AMO(xs) plus (-x | z) for every x; z is appended as the last input.

    Raises:
        EncodingError: If z is one of xs.
    """
    if z in set(xs):
        raise EncodingError(f"indicator {z} is among the inputs")
    return encode_with(
        "amo-prime",
        Constraint.amo_indicator(),
        xs,
        lambda sink, v: emit_amo_prime(sink, v, z),
        inputs=[*xs, z],
    )
