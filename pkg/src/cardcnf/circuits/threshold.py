"""Monotone circuits for the threshold-2 and threshold-3 functions."""

import logging
from collections import defaultdict
from collections.abc import Sequence
from itertools import combinations

import numpy as np

from cardcnf.circuits.circuit import FALSE_WIRE, Circuit, CircuitBuilder
from cardcnf.encoders.layout import (
    MultipartiteShape,
    first_edges,
    product_grid,
    rods,
)
from cardcnf.utils.intmath import ceil_root

logger = logging.getLogger(__name__)

# Below this many inputs T3 uses a running counter instead of the cube.
T3_GRID_MIN = 27
T3_DIRECT_MAX = 8


def _grid_ors(b: CircuitBuilder, wires: Sequence[int]) -> tuple[list[int], list[int]]:
    grid = product_grid(len(wires))
    rows: list[list[int]] = [[] for _ in range(grid.rows)]
    cols: list[list[int]] = [[] for _ in range(grid.width)]
    for t, wire in enumerate(wires):
        r, c = grid.position(t)
        rows[r].append(wire)
        cols[c].append(wire)
    return [b.or_all(row) for row in rows], [b.or_all(col) for col in cols]


def _s2(b: CircuitBuilder, wires: Sequence[int], need_or: bool = True) -> tuple[int, int]:
    """(OR, T2) of the wires; the OR is FALSE_WIRE when not needed."""
    n = len(wires)
    if n == 0:
        return FALSE_WIRE, FALSE_WIRE
    if n == 1:
        return wires[0], FALSE_WIRE
    if n == 2:
        return (b.or_(wires[0], wires[1]) if need_or else FALSE_WIRE), b.and_(wires[0], wires[1])
    row_ors, col_ors = _grid_ors(b, wires)
    any_row, t2_rows = _s2(b, row_ors, need_or)
    _, t2_cols = _s2(b, col_ors, need_or=False)
    return any_row, b.or_(t2_rows, t2_cols)


def _t3_direct(b: CircuitBuilder, wires: Sequence[int]) -> int:
    pairs: dict[tuple[int, int], int] = {}
    terms: list[int] = []
    for i, j, k in combinations(range(len(wires)), 3):
        if (i, j) not in pairs:
            pairs[(i, j)] = b.and_(wires[i], wires[j])
        terms.append(b.and_(pairs[(i, j)], wires[k]))
    return b.or_all(terms)


def _t3_counter(b: CircuitBuilder, wires: Sequence[int]) -> int:
    one, two, three = wires[0], FALSE_WIRE, FALSE_WIRE
    last = len(wires) - 1
    for i in range(1, len(wires)):
        x = wires[i]
        three = b.or_(three, b.and_(two, x))
        if i < last:
            two = b.or_(two, b.and_(one, x))
            one = b.or_(one, x)
    return three


def _t3(b: CircuitBuilder, wires: Sequence[int]) -> int:
    n = len(wires)
    if n < 3:
        return FALSE_WIRE
    if n <= T3_DIRECT_MAX:
        return _t3_direct(b, wires)
    if n < T3_GRID_MIN:
        return _t3_counter(b, wires)
    p = ceil_root(n, 3)
    points = np.arange(n, dtype=np.int64)
    faces = [rods(points, p, 3, d) for d in range(3)]
    if any(len(keys) >= n for keys, _ in faces):
        return _t3_counter(b, wires)
    result = FALSE_WIRE
    for keys, inverse in faces:
        members: list[list[int]] = [[] for _ in range(len(keys))]
        for t, rod in enumerate(inverse.tolist()):
            members[rod].append(wires[t])
        result = b.or_(result, _t3(b, [b.or_all(rod) for rod in members]))
    return result


def build_s2(n: int) -> Circuit:
    """Circuit with outputs (x1 | ... | xn, T2(x1..xn)).

    Inputs fill a ceil(sqrt(n)) wide grid; rows and columns are ORed and
    the construction recurses on both. Two true inputs either sit in
    different rows or in one row and different columns.
    """
    b = CircuitBuilder(n)
    any_true, t2 = _s2(b, b.inputs())
    return b.build([any_true, t2])


def build_t3(n: int) -> Circuit:
    """Circuit for T3(x1..xn): weight at least 3.

    Inputs fill a cube of side ceil(n^(1/3)); each of the three faces of
    rod ORs gets a recursive T3 and the output ORs them. Three distinct
    points stay distinct after dropping some coordinate, so one face sees
    three true rods.
    """
    b = CircuitBuilder(n)
    return b.build([_t3(b, b.inputs())])


def build_t2_product(n: int) -> Circuit:
    """Product-style T2: OR of T2 over row ORs and T2 over column ORs, recursively."""
    b = CircuitBuilder(n)
    _, t2 = _s2(b, b.inputs(), need_or=False)
    return b.build([t2])


def build_t2_multipartite(n: int) -> Circuit:
    """T2 over inputs placed on the edges of a complete multipartite graph.

    Every used vertex ORs its incident edges and each part gets an S2 over
    its vertices. Two distinct true edges either activate two vertices of
    one part or touch three parts, so the output is the OR of the per-part
    T2 outputs and a T3 over the per-part OR outputs.
    """
    b = CircuitBuilder(n)
    if n <= 2:
        return b.build([_s2(b, b.inputs(), need_or=False)[1]])
    shape = MultipartiteShape.for_inputs(n)
    edges = first_edges(shape.edges(), n)
    incident: dict[int, list[int]] = defaultdict(list)
    for t, (u, v) in enumerate(edges):
        incident[u].append(b.input(t + 1))
        incident[v].append(b.input(t + 1))
    vertex_wire = {v: b.or_all(incident[v]) for v in sorted(incident)}

    parts: dict[int, list[int]] = defaultdict(list)
    for v, wire in vertex_wire.items():
        parts[shape.part_of(v)].append(wire)
    indicators: list[int] = []
    doubles: list[int] = []
    for part in sorted(parts):
        z, w = _s2(b, parts[part])
        indicators.append(z)
        doubles.append(w)
    output = b.or_(b.or_all(doubles), _t3(b, indicators))
    logger.debug(f"T2 multipartite n={n} p={shape.p} q={shape.q} gates={len(b.gates)}")
    return b.build([output])
