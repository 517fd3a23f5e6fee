"""Distinct projections of grid points."""

from collections.abc import Sequence


def distinguishing_coordinate(points: Sequence[Sequence[int]]) -> int:
    """Find a coordinate whose deletion keeps the given points distinct.

    For at most k distinct points of arity k such a coordinate always exists.

    Args:
        points: Distinct points of equal arity k, at most k of them.

    Returns:
        A 1-based coordinate d; the first one that works.

    Raises:
        ValueError: If the points repeat, have mixed arity, or outnumber it.
    """
    if not points:
        raise ValueError("at least one point is required")
    arity = len(points[0])
    if any(len(p) != arity for p in points):
        raise ValueError("points must share one arity")
    if len(set(map(tuple, points))) != len(points):
        raise ValueError("points must be distinct")
    if len(points) > arity:
        raise ValueError(f"at most {arity} points are allowed, got {len(points)}")

    for d in range(arity):
        projected = {tuple(p[:d]) + tuple(p[d + 1 :]) for p in points}
        if len(projected) == len(points):
            return d + 1
    raise AssertionError("no distinguishing coordinate among at most k distinct points")
