"""Constant terms at the pole of lattice zeta functions.

The lattice sum Z(s) of a positive-definite binary form Q = (a, b, c) has a
simple pole at s = 1 with residue 2 pi / sqrt(D), D = 4ac - b^2.  Subtracting
a matching multiple of the Riemann zeta pole leaves

    g(eps) = (sqrt(D) / 4 pi) Z(1 + eps) - zeta(1 + 2 eps),

whose limit at eps = 0 equals (1/2) log(a / D) - 2 log |eta(z_Q)| where z_Q
is the root of a z^2 + b z + c = 0 in the upper half plane.  This module
extracts the limit numerically by polynomial extrapolation in eps and
provides the closed-form right side for comparison.

For Q = (1, 0, 1) the lattice sum factors through Dirichlet series, giving
the scalar family h(eps) = (2/pi) zeta(1+eps) L(1+eps) - zeta(1+2 eps) whose
limit is the logarithmic cosh integral; that cross-check and the four-route
assembly of the theta value at z = i live here too.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .approx import ApproxValue, NonConvergence
from .epstein import BinaryQuadraticForm, epstein_accelerated
from .modular import UpperHalfPoint, eta_uhp, theta_uhp
from .quadrature import gamma_integral, integral_I
from .report import VerificationRecord, make_record
from .special_values import L_chi4, zeta, zeta_2s_minus_1

__all__ = [
    "ExtrapolationTable",
    "extrapolate_to_zero",
    "kronecker_lhs",
    "kronecker_lhs_table",
    "kronecker_rhs",
    "l1_series",
    "target_limit_check",
    "theta_at_i_assembly",
]

_EPS = 2.2204460492503131e-16


@dataclass(frozen=True)
class ExtrapolationTable:
    """Richardson-style record of a limit taken along decreasing abscissae."""

    abscissae: tuple[float, ...]
    values: tuple[float, ...]
    extrapolated: float
    error_bound: float

    def __post_init__(self):
        if len(self.abscissae) < 4:
            raise ValueError("need at least 4 nodes to extrapolate")
        if len(self.abscissae) != len(self.values):
            raise ValueError("abscissae and values must align")
        for x in self.abscissae:
            if not (math.isfinite(x) and x > 0.0):
                raise ValueError(f"abscissae must be positive, got {x}")
        for lo, hi in zip(self.abscissae[1:], self.abscissae):
            if not lo < hi:
                raise ValueError("abscissae must decrease strictly")
        for v in self.values:
            if not math.isfinite(v):
                raise ValueError(f"non-finite node value {v}")
        if not (math.isfinite(self.extrapolated)
                and math.isfinite(self.error_bound) and self.error_bound >= 0.0):
            raise ValueError("bad extrapolation result")


def extrapolate_to_zero(abscissae, values, value_bounds=None) -> ExtrapolationTable:
    """Neville evaluation at 0 of the polynomial through (x_k, y_k).

    The reported bound adds the last diagonal increment (truncation
    estimate) to the node bounds pushed through the same recurrence with
    absolute coefficients, which is exact for the error amplification of
    the linear extrapolation weights.
    """
    xs = [float(x) for x in abscissae]
    t = [float(y) for y in values]
    n = len(xs)
    if n < 4 or len(t) != n:
        raise ValueError("need at least 4 aligned nodes")
    amp = [0.0] * n if value_bounds is None else [float(b) for b in value_bounds]
    if len(amp) != n:
        raise ValueError("value_bounds must align with values")
    corner_prev = t[0]
    corner_gap = math.inf
    for m in range(1, n):
        for i in range(n - m):
            denom = xs[i + m] - xs[i]
            w_hi = xs[i + m] / denom
            w_lo = -xs[i] / denom
            t[i] = w_hi * t[i] + w_lo * t[i + 1]
            amp[i] = abs(w_hi) * amp[i] + abs(w_lo) * amp[i + 1]
        corner_gap = abs(t[0] - corner_prev)
        corner_prev = t[0]
    bound = corner_gap + amp[0] + 8.0 * _EPS * (1.0 + abs(t[0]))
    return ExtrapolationTable(tuple(xs), tuple(float(y) for y in values), t[0], bound)


def _pole_gap_nodes(form: BinaryQuadraticForm, node_tol: float,
                    eps0: float, depth: int):
    factor = math.sqrt(form.disc) / (4.0 * math.pi)
    xs, vals, bounds, cost = [], [], [], 0
    for k in range(depth):
        eps = eps0 * 2.0 ** -k
        z_val = epstein_accelerated(form, 1.0 + eps, node_tol / (2.0 * factor))
        zeta_val = zeta_2s_minus_1(1.0 + eps, node_tol / 2.0)
        node = factor * z_val - zeta_val
        xs.append(eps)
        vals.append(node.value)
        bounds.append(node.error_bound)
        cost += node.cost
    return xs, vals, bounds, cost


def kronecker_lhs_table(form: BinaryQuadraticForm, tol: float = 1e-8,
                        eps0: float = 0.1, depth: int = 8) -> ExtrapolationTable:
    """The extrapolation table behind kronecker_lhs, for inspection."""
    _check_limit_args(tol, eps0, depth)
    xs, vals, bounds, _ = _pole_gap_nodes(form, tol / 64.0, eps0, depth)
    return extrapolate_to_zero(xs, vals, bounds)


def kronecker_lhs(form: BinaryQuadraticForm, tol: float = 1e-8,
                  eps0: float = 0.1, depth: int = 8) -> ApproxValue:
    """Limit of (sqrt(D)/4 pi) Z(1+eps) - zeta(1+2 eps) as eps drops to 0."""
    _check_limit_args(tol, eps0, depth)
    xs, vals, bounds, cost = _pole_gap_nodes(form, tol / 64.0, eps0, depth)
    table = extrapolate_to_zero(xs, vals, bounds)
    if table.error_bound > tol:
        raise NonConvergence(
            f"pole-gap extrapolation stalled above tol={tol:g}",
            value=table.extrapolated, error_bound=table.error_bound, cost=cost)
    return ApproxValue(table.extrapolated, table.error_bound, cost)


def _check_limit_args(tol: float, eps0: float, depth: int) -> None:
    if not (tol > 0.0 and math.isfinite(tol)):
        raise ValueError(f"tolerance must be positive and finite, got {tol}")
    if not 0.0 < eps0 <= 0.5:
        raise ValueError(f"eps0 must lie in (0, 0.5], got {eps0}")
    if not (isinstance(depth, int) and 4 <= depth <= 16):
        raise ValueError(f"depth must be an integer in [4, 16], got {depth!r}")


def kronecker_rhs(form: BinaryQuadraticForm, tol: float = 1e-11) -> ApproxValue:
    """(1/2) log(a / D) - 2 log |eta(z_Q)|, evaluated from the eta product."""
    z = form.z_point()
    eta = eta_uhp(z, tol / 8.0).magnitude()
    lead = 0.5 * math.log(form.a / form.disc)
    return ApproxValue(lead, 4.0 * _EPS * (1.0 + abs(lead)), 0) - 2.0 * eta.log()


def l1_series(form: BinaryQuadraticForm, tol: float = 1e-11) -> ApproxValue:
    """pi y_Q / 6 - sum_k log|1 - exp(2 pi i k z_Q)|^2, equal to -log|eta(z_Q)|^2."""
    if not (tol > 0.0 and math.isfinite(tol)):
        raise ValueError(f"tolerance must be positive and finite, got {tol}")
    z = form.z_point().as_complex()
    rho = math.exp(-2.0 * math.pi * z.imag)
    terms = [math.pi * z.imag / 6.0]
    k = 0
    while True:
        k += 1
        tail = 4.0 * rho ** (k) / (1.0 - rho)
        if tail <= tol / 2.0 and k > 1:
            break
        if k > 200_000:
            raise NonConvergence("eta log series stalled; point too close to the real line")
        w = 1.0 - cmath.exp(2.0 * math.pi * k * 1j * z)
        terms.append(-2.0 * math.log(abs(w)))
    value = math.fsum(terms)
    bound = tail + 4.0 * _EPS * math.fsum(abs(t) for t in terms)
    return ApproxValue(value, bound, k)


def target_limit_check(tol: float = 1e-8) -> VerificationRecord:
    """Extrapolated (2/pi) zeta(s) L(s) - zeta(2s - 1) at s = 1 versus the
    logarithmic cosh integral."""
    if not (tol > 0.0 and math.isfinite(tol)):
        raise ValueError(f"tolerance must be positive and finite, got {tol}")
    node_tol = tol / 64.0
    xs, vals, bounds = [], [], []
    for k in range(8):
        eps = 0.1 * 2.0 ** -k
        zeta_s = zeta(1.0 + eps, node_tol / 4.0)
        l_s = L_chi4(1.0 + eps, node_tol / 4.0)
        zeta_2s = zeta_2s_minus_1(1.0 + eps, node_tol / 4.0)
        node = (2.0 / math.pi) * (zeta_s * l_s) - zeta_2s
        xs.append(eps)
        vals.append(node.value)
        bounds.append(node.error_bound)
    table = extrapolate_to_zero(xs, vals, bounds)
    rhs = integral_I(1e-12)
    return make_record(
        name="kronecker/scalar-limit-vs-integral",
        paper_anchor="§3",
        lhs=table.extrapolated,
        rhs=rhs.value,
        combined_bound=table.error_bound + rhs.error_bound,
        tolerance=tol,
    )


def theta_at_i_assembly(tol: float = 1e-10) -> VerificationRecord:
    """Four routes to the theta value at z = i, compared pairwise.

    Routes: the theta series itself; sqrt(2) |eta(i)|; the gamma-quotient
    form (2 pi)^(-1/4) sqrt(Gamma(1/4) / Gamma(3/4)); and the closed form
    Gamma(1/4) / (pi^(3/4) sqrt(2)).  The record stores the worst pairwise
    gap against the summed bounds of the two worst routes.
    """
    if not (tol > 0.0 and math.isfinite(tol)):
        raise ValueError(f"tolerance must be positive and finite, got {tol}")
    at_i = UpperHalfPoint(0.0, 1.0)
    g14 = gamma_integral(0.25, 1e-13)
    g34 = gamma_integral(0.75, 1e-13)
    routes = (
        theta_uhp(at_i, 1e-13).magnitude(),
        math.sqrt(2.0) * eta_uhp(at_i, 1e-13).magnitude(),
        (2.0 * math.pi) ** -0.25 * (g14 / g34).sqrt(),
        (1.0 / (math.pi ** 0.75 * math.sqrt(2.0))) * g14,
    )
    worst = 0.0
    for i in range(len(routes)):
        for j in range(i + 1, len(routes)):
            worst = max(worst, abs(routes[i].value - routes[j].value))
    route_bounds = sorted(r.error_bound for r in routes)
    return make_record(
        name="theta/value-at-i-four-routes",
        paper_anchor="Theorem 1",
        lhs=worst,
        rhs=0.0,
        combined_bound=route_bounds[-1] + route_bounds[-2],
        tolerance=tol,
    )
