"""Verification suites: named groups of checks producing report records.

Each suite function takes the run configuration and returns a list of
VerificationRecords sorted by name.  Default tolerances live here, next to
the checks they gate; any of them can be overridden per record name through
the configuration.
"""

from __future__ import annotations

import math

from .approx import ApproxValue
from .epstein import BinaryQuadraticForm, epstein_accelerated, epstein_direct
from .kronecker import (
    kronecker_lhs,
    kronecker_rhs,
    l1_series,
    target_limit_check,
    theta_at_i_assembly,
)
from .modular import (
    UpperHalfPoint,
    eta_uhp,
    quotient_check_name,
    theta_uhp,
    verify_theta_eta_quotient,
)
from .number_theory import r_bruteforce, r_divisor
from .qseries import r_from_theta_squared, theta_qseries, triple_product_qseries
from .quadrature import (
    f_form,
    f_form_derivative_at_1,
    gamma_integral,
    gammaL_integral,
    integral_I,
)
from .report import RunConfig, VerificationRecord, timed_record
from .special_values import (
    L_chi4,
    L_chi4_prime_at_1,
    euler_gamma,
    gamma_gauss,
    zeta,
)

__all__ = ["SUITES", "run_suites"]

_EPS = 2.2204460492503131e-16


def _form_label(form: tuple[float, float, float]) -> str:
    return ",".join(format(v, "g") for v in form)


def _s_label(s: float) -> str:
    return format(s, ".17g")


def _record(config: RunConfig, name: str, anchor: str, default_tol: float, builder):
    return timed_record(name, anchor, config.tolerance(name, default_tol), builder)


def _suite_triple_product(config: RunConfig) -> list[VerificationRecord]:
    order = config.qseries_order

    def check():
        lhs = theta_qseries(order)
        rhs = triple_product_qseries(order)
        gap = max(abs(x - y) for x, y in zip(lhs.coeffs, rhs.coeffs))
        return float(gap), 0.0, 0.0

    return [_record(config, "triple-product/theta-vs-product", "Lemma 1", 0.0, check)]


def _suite_two_squares(config: RunConfig) -> list[VerificationRecord]:
    order = config.qseries_order

    def divisor_vs_bruteforce():
        gap = max(abs(r_divisor(n) - r_bruteforce(n)) for n in range(1, order + 1))
        return float(gap), 0.0, 0.0

    def theta_square_vs_divisor():
        gap = max(abs(r_from_theta_squared(n, order) - r_divisor(n))
                  for n in range(1, order + 1))
        return float(gap), 0.0, 0.0

    records = [
        _record(config, "two-squares/bruteforce-vs-divisor", "Lemma 2", 0.0,
                divisor_vs_bruteforce),
        _record(config, "two-squares/theta-squared-vs-divisor", "§3", 0.0,
                theta_square_vs_divisor),
    ]
    return sorted(records, key=lambda r: r.name)


def _suite_integral(config: RunConfig) -> list[VerificationRecord]:
    records = []

    def exp_i_check():
        lhs = integral_I(1e-12).exp()
        quotient = gamma_integral(0.75, 1e-13) / gamma_integral(0.25, 1e-13)
        rhs = math.sqrt(2.0 * math.pi) * quotient
        return lhs.value, rhs.value, lhs.error_bound + rhs.error_bound

    records.append(_record(config, "integral/exp-I-vs-gamma-quotient", "Lemma 4",
                           1e-10, exp_i_check))

    def reflection_check():
        product = gamma_integral(0.25, 1e-13) * gamma_integral(0.75, 1e-13)
        target = math.pi * math.sqrt(2.0)
        return product.value, target, product.error_bound + 4.0 * _EPS * target

    records.append(_record(config, "integral/gamma-reflection-quarter", "§1",
                           1e-10, reflection_check))

    for triple in config.forms:
        form = BinaryQuadraticForm(*triple)
        label = _form_label(triple)

        def value_check(q=form):
            got = f_form(q, 1.0, 1e-12)
            target = -2.0 * math.pi / math.sqrt(q.disc)
            return got.value, target, got.error_bound + 4.0 * _EPS * abs(target)

        records.append(_record(config, f"integral/f-at-1/{label}", "Prop. 3",
                               1e-10, value_check))

        def slope_check(q=form):
            got = f_form_derivative_at_1(q, 1e-11)
            target = -(4.0 * math.pi / math.sqrt(q.disc)) * math.log(
                math.sqrt(q.a / q.disc))
            return got.value, target, got.error_bound + 4.0 * _EPS * abs(target)

        records.append(_record(config, f"integral/f-prime-at-1/{label}", "eq. (1)",
                               1e-8, slope_check))

    return sorted(records, key=lambda r: r.name)


def _suite_special_values(config: RunConfig) -> list[VerificationRecord]:
    records = []

    def zeta_two():
        got = zeta(2.0, 1e-13)
        return got.value, math.pi ** 2 / 6.0, got.error_bound + 4.0 * _EPS

    records.append(_record(config, "special-values/zeta-at-2", "Prop. 3",
                           1e-12, zeta_two))

    def l_one():
        got = L_chi4(1.0, 1e-13)
        return got.value, math.pi / 4.0, got.error_bound + 4.0 * _EPS

    records.append(_record(config, "special-values/L-at-1", "Lemma 2",
                           1e-12, l_one))

    def pole_constant():
        delta = 1e-4
        got = zeta(1.0 + delta, 1e-11)
        gamma = euler_gamma(1e-13)
        lhs = got.value - 1.0 / delta
        bound = got.error_bound + gamma.error_bound + 1e4 * 4.0 * _EPS
        return lhs, gamma.value, bound + 1e-4

    records.append(_record(config, "special-values/zeta-pole-constant", "§3",
                           1e-3, pole_constant))

    def gauss_reflection():
        product = gamma_gauss(0.25, 1e-8) * gamma_gauss(0.75, 1e-8)
        target = math.pi * math.sqrt(2.0)
        return product.value, target, product.error_bound + 4.0 * _EPS * target

    records.append(_record(config, "special-values/gauss-gamma-reflection", "§1",
                           1e-8, gauss_reflection))

    def product_rule() -> ApproxValue:
        gamma = euler_gamma(1e-13)
        slope = L_chi4_prime_at_1(1e-11)
        return slope - (math.pi / 4.0) * gamma

    def central_difference() -> ApproxValue:
        h = 1e-4
        hi = gammaL_integral(1.0 + h, 1e-13)
        lo = gammaL_integral(1.0 - h, 1e-13)
        value = (hi.value - lo.value) / (2.0 * h)
        # Final term: truncation allowance for the O(h^2) difference defect.
        bound = (hi.error_bound + lo.error_bound) / (2.0 * h) + 1e-7
        return ApproxValue(value, bound, hi.cost + lo.cost)

    def half_pi_integral() -> ApproxValue:
        return (math.pi / 2.0) * integral_I(1e-12)

    routes = (
        ("product-rule", product_rule),
        ("central-difference", central_difference),
        ("half-pi-integral", half_pi_integral),
    )
    for i in range(len(routes)):
        for j in range(i + 1, len(routes)):
            name_i, fn_i = routes[i]
            name_j, fn_j = routes[j]

            def pair_check(f=fn_i, g=fn_j):
                left = f()
                right = g()
                return left.value, right.value, left.error_bound + right.error_bound

            records.append(_record(
                config,
                f"special-values/gammaL-slope/{name_i}-vs-{name_j}",
                "§3", 1e-6, pair_check))

    return sorted(records, key=lambda r: r.name)


_DIRICHLET_S = (1.5, 2.0, 3.0, 1.0 + 2.0 ** -10)
_GRID_S = (1.25, 1.5, 2.0, 3.0)
_DIRECT_RADIUS = 256


def _suite_epstein(config: RunConfig) -> list[VerificationRecord]:
    records = []
    unit = BinaryQuadraticForm(1.0, 0.0, 1.0)

    for s in _DIRICHLET_S:
        def dirichlet_check(s=s):
            got = epstein_accelerated(unit, s, 1e-10)
            target = 4.0 * (zeta(s, 1e-12) * L_chi4(s, 1e-12))
            return got.value, target.value, got.error_bound + target.error_bound

        records.append(_record(config,
                               f"epstein/accelerated-vs-dirichlet/s={_s_label(s)}",
                               "Lemma 2", 1e-9, dirichlet_check))

    for triple in config.forms:
        form = BinaryQuadraticForm(*triple)
        label = _form_label(triple)
        for s in _GRID_S:
            def engines_check(q=form, s=s):
                slow = epstein_direct(q, s, _DIRECT_RADIUS)
                fast = epstein_accelerated(q, s, 1e-10)
                return slow.value, fast.value, slow.error_bound + fast.error_bound

            records.append(_record(
                config,
                f"epstein/direct-vs-accelerated/{label}/s={_s_label(s)}",
                "§3", 0.0, engines_check))

    def unimodular_check():
        left = epstein_accelerated(unit, 1.5, 1e-12)
        right = epstein_accelerated(BinaryQuadraticForm(2.0, -2.0, 1.0), 1.5, 1e-12)
        return left.value, right.value, left.error_bound + right.error_bound

    records.append(_record(config, "epstein/unimodular-equivalence/s=1.5", "§3",
                           0.0, unimodular_check))

    return sorted(records, key=lambda r: r.name)


def _suite_kronecker(config: RunConfig) -> list[VerificationRecord]:
    records = []

    for triple in config.forms:
        form = BinaryQuadraticForm(*triple)
        label = _form_label(triple)

        def limit_check(q=form):
            left = kronecker_lhs(q, 1e-8)
            right = kronecker_rhs(q, 1e-11)
            return left.value, right.value, left.error_bound + right.error_bound

        records.append(_record(config, f"kronecker/lhs-vs-rhs/{label}", "Prop. 3",
                               1e-6, limit_check))

        def series_check(q=form):
            left = l1_series(q, 1e-11)
            mag = eta_uhp(q.z_point(), 1e-13).magnitude()
            right = -2.0 * mag.log()
            return left.value, right.value, left.error_bound + right.error_bound

        records.append(_record(config, f"kronecker/l1-vs-eta-log/{label}", "eq. (1)",
                               1e-10, series_check))

    limit_name = "kronecker/scalar-limit-vs-integral"
    records.append(target_limit_check(config.tolerance(limit_name, 1e-8)))

    return sorted(records, key=lambda r: r.name)


_QUOTIENT_POINTS = (
    UpperHalfPoint(0.0, 1.0),
    UpperHalfPoint(0.3, 1.7),
    UpperHalfPoint(0.0, 3.0),
)


def _suite_theta(config: RunConfig) -> list[VerificationRecord]:
    records = []

    assembly_name = "theta/value-at-i-four-routes"
    records.append(theta_at_i_assembly(config.tolerance(assembly_name, 1e-10)))

    for z in _QUOTIENT_POINTS:
        name = quotient_check_name(z)
        records.append(verify_theta_eta_quotient(z, config.tolerance(name, 1e-12)))

    def shift_check():
        left = eta_uhp(UpperHalfPoint(1.0, 1.0), 1e-13).magnitude()
        right = eta_uhp(UpperHalfPoint(0.0, 1.0), 1e-13).magnitude()
        return left.value, right.value, left.error_bound + right.error_bound

    records.append(_record(config, "theta/eta-shift-modulus", "§3", 0.0, shift_check))

    def series_vs_qseries():
        z = UpperHalfPoint(0.0, 2.0)
        direct = theta_uhp(z, 1e-13)
        q = math.exp(-2.0 * math.pi)
        coeffs = theta_qseries(64).coeffs
        value = math.fsum(c * q ** n for n, c in enumerate(coeffs))
        tail = 3.0 * q ** 65 / (1.0 - q)
        bound = direct.error_bound + tail + 8.0 * _EPS
        return direct.re, value, bound

    records.append(_record(config, "theta/series-at-2i-vs-qseries", "Theorem 1",
                           1e-12, series_vs_qseries))

    return sorted(records, key=lambda r: r.name)


SUITES = {
    "triple-product": _suite_triple_product,
    "two-squares": _suite_two_squares,
    "integral": _suite_integral,
    "special-values": _suite_special_values,
    "epstein": _suite_epstein,
    "kronecker": _suite_kronecker,
    "theta": _suite_theta,
}


def run_suites(config: RunConfig) -> list[VerificationRecord]:
    """Run the configured suites in canonical order; records sorted within."""
    records: list[VerificationRecord] = []
    for suite in config.suites:
        records.extend(SUITES[suite](config))
    return records
