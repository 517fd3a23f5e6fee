"""Exact integer helpers for the parameter formulas.

Roots start from a float estimate and are corrected with integer arithmetic,
e.g. ceil_root(10**6, 3) == 100 although 1e6 ** (1/3) < 100.
"""

import math


def ceil_div(a: int, b: int) -> int:
    """Return ceil(a / b) for positive b."""
    return -(-a // b)


def floor_root(n: int, r: int) -> int:
    """Return the largest x with x**r <= n.

    Args:
        n: Non-negative integer.
        r: Root degree, at least 1.
    """
    if n < 0 or r < 1:
        raise ValueError(f"floor_root needs n >= 0 and r >= 1, got n={n}, r={r}")
    if n < 2 or r == 1:
        return n
    if r == 2:
        return math.isqrt(n)
    x = int(round(n ** (1.0 / r)))
    while x**r > n:
        x -= 1
    while (x + 1) ** r <= n:
        x += 1
    return x


def ceil_root(n: int, r: int) -> int:
    """Return the smallest x with x**r >= n."""
    x = floor_root(n, r)
    return x if x**r == n else x + 1


def ceil_sqrt(n: int) -> int:
    """Return the smallest x with x*x >= n."""
    return ceil_root(n, 2)


def ceil_log(n: int, base: int) -> int:
    """Return the smallest e >= 1 with base**e >= n (base >= 2)."""
    if base < 2:
        raise ValueError(f"ceil_log needs base >= 2, got {base}")
    e, power = 1, base
    while power < n:
        power *= base
        e += 1
    return e
