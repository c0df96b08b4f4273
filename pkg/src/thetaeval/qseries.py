"""Truncated power series with exact integer coefficients.

Everything here is exact: coefficients are unbounded Python ints and a
truncation order fixed at construction.  The two series of interest are the
square-indicator series (1 + 2q + 2q^4 + 2q^9 + ...) and the product
(1-q^2)(1+q)^2 (1-q^4)(1+q^3)^2 ..., expanded factor by factor.  A product
expander stops at the first factor congruent to 1 modulo q^(order+1), since
later factors cannot touch retained coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class QSeries:
    """Coefficients c[0..order] of a series truncated after q**order."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a series needs at least the constant coefficient")
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError("coefficients must be exact integers")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 0..{self.order}")
        return self.coeffs[n]

    def __mul__(self, other: "QSeries") -> "QSeries":
        return qs_mul(self, other)


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Exact Cauchy product truncated to min(a.order, b.order)."""
    order = min(a.order, b.order)
    ca, cb = a.coeffs, b.coeffs
    out = []
    for k in range(order + 1):
        out.append(sum(ca[i] * cb[k - i] for i in range(k + 1)))
    return QSeries(tuple(out))


def theta_qseries(order: int) -> QSeries:
    """Sum over all integers n of q**(n*n), truncated: 2 at positive squares."""
    _check_order(order)
    out = [0] * (order + 1)
    out[0] = 1
    m = 1
    while m * m <= order:
        out[m * m] = 2
        m += 1
    return QSeries(tuple(out))


def triple_product_qseries(order: int) -> QSeries:
    """Product over n >= 1 of (1 - q^(2n)) (1 + q^(2n-1))^2, truncated."""
    _check_order(order)
    out = [0] * (order + 1)
    out[0] = 1
    n = 1
    while 2 * n - 1 <= order:
        # (1 + q^(2n-1))^2 = 1 + 2 q^(2n-1) + q^(4n-2)
        _mul_sparse(out, ((2 * n - 1, 2), (4 * n - 2, 1)))
        if 2 * n <= order:
            _mul_sparse(out, ((2 * n, -1),))
        n += 1
    return QSeries(tuple(out))


def r_from_theta_squared(n: int, order: int) -> int:
    """Representation count r(n): coefficient of q**n in the squared series."""
    _check_order(order)
    if not 0 <= n <= order:
        raise ValueError(f"need 0 <= n <= order, got n={n}, order={order}")
    return _theta_squared_coeffs(order)[n]


def _mul_sparse(coeffs: list[int], shifts: tuple[tuple[int, int], ...]) -> None:
    # In-place multiply by 1 + sum of e * q^k over (k, e) in shifts, k >= 1.
    # Descending index keeps the lower entries untouched until they are read.
    top = len(coeffs) - 1
    for j in range(top, 0, -1):
        acc = coeffs[j]
        for k, e in shifts:
            if k <= j:
                acc += e * coeffs[j - k]
        coeffs[j] = acc


@lru_cache(maxsize=8)
def _theta_squared_coeffs(order: int) -> tuple[int, ...]:
    t = theta_qseries(order)
    return qs_mul(t, t).coeffs


def _check_order(order: int) -> None:
    if not isinstance(order, int) or isinstance(order, bool) or order < 0:
        raise ValueError(f"order must be a non-negative integer, got {order!r}")
