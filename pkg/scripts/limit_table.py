"""Show why the pole-gap limit needs extrapolation.

For each standard form, print the raw node values g(eps) on the halving
ladder eps = 0.1 * 2^-k.  The raw sequence crawls toward the limit at
first order in eps; the Neville diagonal over the same eight nodes lands
within ~1e-12 of the closed form.  The last column is the honest check:
|extrapolated - closed| against the table's own reported bound.

Usage: python scripts/limit_table.py
"""

import math

from thetaeval import BinaryQuadraticForm, kronecker_lhs_table, kronecker_rhs

FORMS = ((1.0, 0.0, 1.0), (2.0, -2.0, 1.0), (1.0, 0.0, 2.0), (1.0, 1.0, 1.0))


def main():
    for triple in FORMS:
        form = BinaryQuadraticForm(*triple)
        table = kronecker_lhs_table(form, 1e-8)
        closed = kronecker_rhs(form, 1e-13)
        label = ",".join(f"{c:g}" for c in triple)
        print(f"form ({label}), closed value {closed.value:.15f}")
        for eps, val in zip(table.abscissae, table.values):
            print(f"  eps {eps:<10.6g} node {val:.15f} "
                  f"(off by {abs(val - closed.value):.2e})")
        err = abs(table.extrapolated - closed.value)
        print(f"  extrapolated {table.extrapolated:.15f}")
        print(f"  true error {err:.2e} vs reported bound {table.error_bound:.2e} "
              f"{'OK' if err <= table.error_bound else 'VIOLATED'}\n")


if __name__ == "__main__":
    main()
