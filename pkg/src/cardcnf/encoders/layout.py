"""Placement of inputs on grids and graph edges."""

from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations, islice

import numpy as np

from cardcnf.utils.intmath import ceil_root, ceil_sqrt


def drop_digit_keys(points: np.ndarray, p: int, digits: int, d: int) -> np.ndarray:
    """Project base-p numbers onto the remaining digits after deleting digit d.

    Points are read as `digits`-digit base-p numbers, most significant digit
    first. The result is the number formed by the other digits.

    Args:
        points: Integer array of values in [0, p**digits).
        p: Base.
        digits: Number of digits per point.
        d: Index of the digit to remove (0 = most significant).
    """
    weight = p ** (digits - 1 - d)
    return (points // (weight * p)) * weight + points % weight


def rods(points: np.ndarray, p: int, digits: int, d: int) -> tuple[np.ndarray, np.ndarray]:
    """Group points by their projection along digit d.

    Returns:
        (keys, inverse): the sorted distinct projection keys and, for every
        point, the index of its key.
    """
    keys = drop_digit_keys(points, p, digits, d)
    unique, inverse = np.unique(keys, return_inverse=True)
    return unique, inverse.reshape(-1)


@dataclass(frozen=True)
class GridShape:
    """Row-major placement of n cells in rows of fixed width.

    Attributes:
        n: Number of cells
        width: Row width
    """

    n: int
    width: int

    @property
    def rows(self) -> int:
        return -(-self.n // self.width)

    def position(self, t: int) -> tuple[int, int]:
        """Row and column of cell t."""
        return divmod(t, self.width)


def product_grid(n: int) -> GridShape:
    """The ceil(sqrt(n))-wide grid of the product encoding."""
    return GridShape(n, ceil_sqrt(n))


@dataclass(frozen=True)
class MultipartiteShape:
    """Complete p-partite graph with q vertices per part.

    Attributes:
        p: Number of parts
        q: Vertices per part
    """

    p: int
    q: int

    @classmethod
    def for_inputs(cls, n: int) -> "MultipartiteShape":
        """p = ceil(n^(1/6)) + 1 and q = ceil(sqrt(2) * n^(1/3))."""
        return cls(ceil_root(n, 6) + 1, ceil_root(8 * n * n, 6))

    @property
    def capacity(self) -> int:
        return self.p * (self.p - 1) // 2 * self.q * self.q

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as vertex pairs (a*q + u, b*q + v), ordered by part pair then vertex pair."""
        q = self.q
        for a, b in combinations(range(self.p), 2):
            for u in range(q):
                for v in range(q):
                    yield a * q + u, b * q + v

    def part_of(self, vertex: int) -> int:
        return vertex // self.q


def clique_size(n: int) -> int:
    """Vertex count p = ceil(sqrt(2n)) + 1 of the clique encoding."""
    return ceil_sqrt(2 * n) + 1


def first_edges(edges: Iterator[tuple[int, int]], n: int) -> list[tuple[int, int]]:
    """The first n edges of an edge stream."""
    return list(islice(edges, n))


def clique_edges(p: int) -> Iterator[tuple[int, int]]:
    """Vertex pairs i < j of K_p in lexicographic order."""
    return combinations(range(p), 2)
