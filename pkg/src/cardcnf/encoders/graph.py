"""Edge-based AMO encoders: multipartite and clique.

Each input is an edge of a graph; a true input activates both endpoints.
At most one edge is chosen iff at most two vertices are active and, when
two are, they are joined by a chosen edge. Only vertices incident to an
assigned edge get variables.
"""

import logging
from collections import defaultdict
from collections.abc import Sequence
from typing import Any

import numpy as np

from cardcnf.cnf.encoding import Constraint, Encoding
from cardcnf.cnf.formula import ClauseSink, Literal
from cardcnf.encoders.amk import BASE_DIRECT, emit_generalized_product
from cardcnf.encoders.amo import emit_amo_prime, emit_direct
from cardcnf.encoders.base import encode_with
from cardcnf.encoders.grid import emit_disjunctive_grid_compression
from cardcnf.encoders.layout import MultipartiteShape, clique_edges, clique_size, first_edges

logger = logging.getLogger(__name__)


def _emit_endpoints(
    sink: ClauseSink,
    xs: Sequence[Literal],
    edges: list[tuple[int, int]],
) -> dict[int, int]:
    vertices = sorted({v for edge in edges for v in edge})
    first = sink.new_block(len(vertices))
    var_of = {v: first + i for i, v in enumerate(vertices)}
    x = np.asarray(xs, dtype=np.int64)
    ends = np.asarray([[var_of[a], var_of[b]] for a, b in edges], dtype=np.int64)
    with sink.group("edges"):
        sink.add_rows(np.stack([-x, ends[:, 0]], axis=1))
        sink.add_rows(np.stack([-x, ends[:, 1]], axis=1))
    return var_of


def emit_multipartite(sink: ClauseSink, xs: Sequence[Literal]) -> dict[str, Any]:
    """Emit the multipartite AMO encoding.

    Inputs take the first n edges of the complete p-partite graph with q
    vertices per part. Every part gets an AMO-with-indicator block over its
    vertices, and at most two part indicators may be true, encoded by the
    generalized product with direct base case.
    """
    n = len(xs)
    if n <= 2:
        emit_direct(sink, xs)
        return {}
    shape = MultipartiteShape.for_inputs(n)
    edges = first_edges(shape.edges(), n)
    var_of = _emit_endpoints(sink, xs, edges)

    parts: dict[int, list[int]] = defaultdict(list)
    for vertex, var in var_of.items():
        parts[shape.part_of(vertex)].append(var)
    indicators: list[int] = []
    with sink.group("parts"):
        for part in sorted(parts):
            z = sink.new_var()
            indicators.append(z)
            emit_amo_prime(sink, parts[part], z)
    with sink.group("amt"):
        emit_generalized_product(sink, indicators, 2, base=BASE_DIRECT)

    logger.debug(f"Multipartite n={n} p={shape.p} q={shape.q} parts used={len(indicators)}")
    return {"p": shape.p, "q": shape.q, "parts": len(indicators), "vertices": len(var_of)}


def emit_clique(sink: ClauseSink, xs: Sequence[Literal]) -> dict[str, Any]:
    """Emit the clique AMO encoding.

    Inputs take the first n edges of K_p with p = ceil(sqrt(2n)) + 1, and at
    most two vertices may be active, encoded by disjunctive grid compression.
    """
    n = len(xs)
    if n <= 2:
        emit_direct(sink, xs)
        return {}
    p = clique_size(n)
    edges = first_edges(clique_edges(p), n)
    var_of = _emit_endpoints(sink, xs, edges)
    with sink.group("amt"):
        amt = emit_disjunctive_grid_compression(sink, list(var_of.values()), 2)
    params: dict[str, Any] = {"p": p, "vertices": len(var_of)}
    params.update({f"amt_{key}": value for key, value in amt.items()})
    return params


def encode_multipartite(xs: Sequence[int]) -> Encoding:
    """Multipartite AMO encoding: 2n + O(sqrt(n)) clauses, propagation complete."""
    return encode_with("multipartite", Constraint.amo(), xs, emit_multipartite)


def encode_clique(xs: Sequence[int]) -> Encoding:
    """Clique AMO encoding with a disjunctive grid compression AMT block."""
    return encode_with("clique", Constraint.amo(), xs, emit_clique)
