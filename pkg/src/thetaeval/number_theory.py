"""Integer arithmetic for two-squares representation counts."""

from __future__ import annotations

from math import isqrt


def chi4(n: int) -> int:
    """The nontrivial character mod 4: 0 on evens, +1 when n = 1 (mod 4), -1 when n = 3 (mod 4)."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("chi4 takes an integer")
    r = n % 4
    if r == 1:
        return 1
    if r == 3:
        return -1
    return 0


def r_bruteforce(n: int) -> int:
    """Count ordered integer pairs (x, y) with x*x + y*y == n, by direct search."""
    _check_positive(n)
    count = 0
    x = 0
    while x * x <= n:
        rem = n - x * x
        y = isqrt(rem)
        if y * y == rem:
            count += (1 if x == 0 else 2) * (1 if y == 0 else 2)
        x += 1
    return count


def r_divisor(n: int) -> int:
    """Representation count via 4 * sum of chi4(d) over the divisors d of n."""
    _check_positive(n)
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += chi4(d)
            q = n // d
            if q != d:
                total += chi4(q)
        d += 1
    return 4 * total


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"need a positive integer, got {n!r}")
