"""Theta and eta on the upper half-plane, with certified truncation tails.

Both functions are entire in their summands and decay geometrically, so
the truncation index is chosen up front from an explicit tail bound and
that bound is what the result reports.  No modular transformation is used
anywhere; values come straight from the defining series and product.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .approx import ApproxValue
from .report import VerificationRecord, make_record

_EPS = 2.2204460492503131e-16

__all__ = [
    "UpperHalfPoint",
    "ComplexApprox",
    "theta_uhp",
    "eta_uhp",
    "quotient_check_name",
    "verify_theta_eta_quotient",
]


def quotient_check_name(z: "UpperHalfPoint") -> str:
    """Report name of the quotient-identity check at z; stable for overrides."""
    return f"theta/quotient-identity/z={z.re:g}+{z.im:g}i"


@dataclass(frozen=True)
class UpperHalfPoint:
    """A point x + iy with y > 0."""

    re: float
    im: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im) and self.im > 0.0):
            raise ValueError(f"need finite re and im > 0, got {self.re}, {self.im}")

    def as_complex(self) -> complex:
        return complex(self.re, self.im)

    @classmethod
    def from_complex(cls, z: complex) -> "UpperHalfPoint":
        return cls(z.real, z.imag)


@dataclass(frozen=True)
class ComplexApprox:
    """A complex value with one bound on the modulus of its total error."""

    re: float
    im: float
    error_bound: float

    def __post_init__(self):
        if not (math.isfinite(self.re) and math.isfinite(self.im)):
            raise ValueError("value must be finite")
        if not (math.isfinite(self.error_bound) and self.error_bound >= 0.0):
            raise ValueError("error bound must be finite and non-negative")

    def as_complex(self) -> complex:
        return complex(self.re, self.im)

    def magnitude(self) -> ApproxValue:
        # | |z'| - |z| | <= |z' - z|, so the same bound covers the modulus.
        return ApproxValue(math.hypot(self.re, self.im), self.error_bound, 0)


def _theta_tail(n: int, y: float) -> float:
    # Geometric bound for twice the sum of exp(-pi k^2 y) over k >= n.
    return 2.0 * math.exp(-math.pi * n * n * y) / -math.expm1(-math.pi * (2 * n + 1) * y)


def _theta_terms(z: UpperHalfPoint, tol: float) -> int:
    n = 1
    while _theta_tail(n, z.im) > tol:
        n += 1
        if n > 1_000_000:
            raise ValueError("tolerance unreachable for this imaginary part")
    return n


def theta_uhp(z: UpperHalfPoint, tol: float = 1e-13) -> ComplexApprox:
    """Sum over all integers n of exp(i pi n^2 z), truncated at a certified tail.

    The partial sum runs over |n| <= N with N the smallest index whose
    geometric tail bound drops below tol; that bound is the reported
    error_bound.
    """
    _check_tol(tol)
    n_max = _theta_terms(z, tol)
    zc = z.as_complex()
    res = [1.0]
    ims = [0.0]
    for n in range(1, n_max + 1):
        term = 2.0 * cmath.exp(1j * math.pi * (n * n) * zc)
        res.append(term.real)
        ims.append(term.imag)
    # Tail plus a per-term roundoff floor; fsum itself is exact.
    roundoff = 2.0 * _EPS * math.fsum(abs(t) for t in res)
    return ComplexApprox(math.fsum(res), math.fsum(ims),
                         _theta_tail(n_max + 1, z.im) + roundoff)


def eta_uhp(z: UpperHalfPoint, tol: float = 1e-13) -> ComplexApprox:
    """exp(i pi z / 12) times the product over n >= 1 of (1 - exp(2 pi i n z)).

    The product is cut once the remaining log-factors are bounded by rho
    with |value| * (exp(rho) - 1) <= tol; that quantity is the reported
    error_bound.
    """
    _check_tol(tol)
    y = z.im
    absw = math.exp(-2.0 * math.pi * y)
    # Crude a-priori modulus bound, enough to pick the cut.
    mod_cap = math.exp(-math.pi * y / 12.0) * math.exp(absw / (1.0 - absw))
    n_max = 1
    while mod_cap * math.expm1(_eta_log_tail(n_max, absw)) > 0.5 * tol:
        n_max += 1
        if n_max > 1_000_000:
            raise ValueError("tolerance unreachable for this imaginary part")
    zc = z.as_complex()
    prod = cmath.exp(1j * math.pi * zc / 12.0)
    for n in range(1, n_max + 1):
        prod *= 1.0 - cmath.exp(2j * math.pi * n * zc)
    bound = abs(prod) * (math.expm1(_eta_log_tail(n_max, absw))
                         + 4.0 * (n_max + 2) * _EPS)
    return ComplexApprox(prod.real, prod.imag, bound)


def _eta_log_tail(n: int, absw: float) -> float:
    # Bound for the sum over k > n of |log(1 - w^k)|, |w| = absw < 1.
    head = absw ** (n + 1)
    return head / ((1.0 - absw) * (1.0 - head))


def verify_theta_eta_quotient(z: UpperHalfPoint, tol: float = 1e-12) -> VerificationRecord:
    """Check theta(z) against eta(z/2 + 1/2)^2 / eta(z + 1).

    Components are evaluated at tol/4; the record stores the modulus of
    the complex mismatch against zero so its fields stay real.
    """
    _check_tol(tol)
    part = 0.25 * tol
    lhs = theta_uhp(z, part)
    half_point = UpperHalfPoint(0.5 * z.re + 0.5, 0.5 * z.im)
    shifted = UpperHalfPoint(z.re + 1.0, z.im)
    top = eta_uhp(half_point, part)
    bottom = eta_uhp(shifted, part)

    top_c = top.as_complex()
    bottom_c = bottom.as_complex()
    quotient = top_c * top_c / bottom_c
    # Worst-case quotient error over the two component balls.
    denom = abs(bottom_c) - bottom.error_bound
    if denom <= 0.0:
        raise ValueError("denominator bound allows zero; tighten tol")
    top_worst = (abs(top_c) + top.error_bound) ** 2 - abs(top_c) ** 2
    rhs_bound = ((top_worst + abs(quotient) * bottom.error_bound) / denom
                 + 4.0 * _EPS * (abs(quotient) + 1.0))

    mismatch = abs(lhs.as_complex() - quotient)
    return make_record(
        name=quotient_check_name(z),
        paper_anchor="§3",
        lhs=mismatch,
        rhs=0.0,
        combined_bound=lhs.error_bound + rhs_bound,
        tolerance=tol,
    )


def _check_tol(tol: float) -> None:
    if not (tol > 0.0 and math.isfinite(tol)):
        raise ValueError(f"tolerance must be positive and finite, got {tol}")
