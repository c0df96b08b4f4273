"""Numerical verification of theta, eta, lattice-sum, and L-series identities.

Everything funnels into one closed-form target: the value of the theta
series at z = i, reachable through four independent computational routes.
Each engine returns values with explicit error bounds; the CLI assembles
named checks into machine-readable reports.
"""

from .approx import ApproxValue, NonConvergence
from .epstein import (
    BinaryQuadraticForm,
    epstein_accelerated,
    epstein_direct,
    evaluate,
    upper_incomplete_gamma,
)
from .kronecker import (
    ExtrapolationTable,
    extrapolate_to_zero,
    kronecker_lhs,
    kronecker_lhs_table,
    kronecker_rhs,
    l1_series,
    target_limit_check,
    theta_at_i_assembly,
)
from .modular import (
    ComplexApprox,
    UpperHalfPoint,
    eta_uhp,
    theta_uhp,
    verify_theta_eta_quotient,
)
from .number_theory import chi4, r_bruteforce, r_divisor
from .qseries import QSeries, qs_mul, r_from_theta_squared, theta_qseries, triple_product_qseries
from .quadrature import (
    IntegralSpec,
    f_form,
    f_form_derivative_at_1,
    gamma_integral,
    gammaL_integral,
    integral_I,
    integrate,
)
from .report import (
    DEFAULT_FORMS,
    SUITE_NAMES,
    RunConfig,
    VerificationRecord,
    emit_report,
    make_record,
)
from .special_values import (
    L_chi4,
    L_chi4_prime_at_1,
    LaurentAtOne,
    euler_gamma,
    gamma_gauss,
    zeta,
    zeta_2s_minus_1,
    zeta_laurent_at_one,
)
from .suites import SUITES, run_suites

__version__ = "0.1.0"

__all__ = [
    "ApproxValue",
    "NonConvergence",
    "BinaryQuadraticForm",
    "epstein_accelerated",
    "epstein_direct",
    "evaluate",
    "upper_incomplete_gamma",
    "ExtrapolationTable",
    "extrapolate_to_zero",
    "kronecker_lhs",
    "kronecker_lhs_table",
    "kronecker_rhs",
    "l1_series",
    "target_limit_check",
    "theta_at_i_assembly",
    "ComplexApprox",
    "UpperHalfPoint",
    "eta_uhp",
    "theta_uhp",
    "verify_theta_eta_quotient",
    "chi4",
    "r_bruteforce",
    "r_divisor",
    "QSeries",
    "qs_mul",
    "r_from_theta_squared",
    "theta_qseries",
    "triple_product_qseries",
    "IntegralSpec",
    "f_form",
    "f_form_derivative_at_1",
    "gamma_integral",
    "gammaL_integral",
    "integral_I",
    "integrate",
    "DEFAULT_FORMS",
    "SUITE_NAMES",
    "RunConfig",
    "VerificationRecord",
    "emit_report",
    "make_record",
    "L_chi4",
    "L_chi4_prime_at_1",
    "LaurentAtOne",
    "euler_gamma",
    "gamma_gauss",
    "zeta",
    "zeta_2s_minus_1",
    "zeta_laurent_at_one",
    "SUITES",
    "run_suites",
    "__version__",
]
