"""Empirical check that the direct lattice engine's error bound is honest.

Two experiments:

1. Grid study: on the standard four forms and s in {1.25, 1.5, 2, 3},
   compare the direct engine at a given radius against the accelerated
   engine pushed to 1e-12 (treated as truth here; its own bound is
   orders of magnitude below anything the direct engine can reach).
   Report err, bound, and err/bound.  Every ratio must stay below 1.

2. Radius sweep: fix the unit form at s = 2 and double the radius from
   64 up.  The truncation tail is removed analytically, so what is left
   is the rim discrepancy, which should decay like 1/radius^2.  The
   printed fitted slope makes the decay visible.

Usage: python scripts/calibrate_direct_engine.py [--radius N] [--sweep-max N]
"""

import argparse
import math
import time

from thetaeval import BinaryQuadraticForm, epstein_accelerated, epstein_direct

FORMS = ((1.0, 0.0, 1.0), (2.0, -2.0, 1.0), (1.0, 0.0, 2.0), (1.0, 1.0, 1.0))
S_GRID = (1.25, 1.5, 2.0, 3.0)


def grid_study(radius):
    print(f"grid study, radius {radius}")
    print(f"{'form':>10} {'s':>5} {'err':>10} {'bound':>10} {'ratio':>7}")
    worst = 0.0
    for triple in FORMS:
        form = BinaryQuadraticForm(*triple)
        for s in S_GRID:
            truth = epstein_accelerated(form, s, 1e-12)
            got = epstein_direct(form, s, radius)
            err = abs(got.value - truth.value)
            ratio = err / got.error_bound
            worst = max(worst, ratio)
            label = ",".join(f"{c:g}" for c in triple)
            print(f"{label:>10} {s:>5g} {err:>10.2e} "
                  f"{got.error_bound:>10.2e} {ratio:>7.3f}")
    print(f"worst err/bound ratio: {worst:.3f}\n")
    return worst


def radius_sweep(max_radius):
    form = BinaryQuadraticForm(1.0, 0.0, 1.0)
    truth = epstein_accelerated(form, 2.0, 1e-12)
    print("radius sweep, unit form, s = 2")
    print(f"{'radius':>7} {'err':>10} {'bound':>10} {'seconds':>8}")
    rows = []
    radius = 64
    while radius <= max_radius:
        start = time.perf_counter()
        got = epstein_direct(form, 2.0, radius)
        elapsed = time.perf_counter() - start
        err = abs(got.value - truth.value)
        rows.append((radius, err))
        print(f"{radius:>7} {err:>10.2e} {got.error_bound:>10.2e} {elapsed:>8.2f}")
        radius *= 2
    # least-squares slope of log err against log radius
    xs = [math.log(r) for r, _ in rows]
    ys = [math.log(e) for _, e in rows if e > 0.0]
    xs = xs[:len(ys)]
    n = len(xs)
    if n >= 2:
        xbar, ybar = sum(xs) / n, sum(ys) / n
        slope = (sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys))
                 / sum((x - xbar) ** 2 for x in xs))
        print(f"fitted decay exponent: {slope:.2f} (expected near -2)\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--radius", type=int, default=256,
                        help="grid-study radius (default 256)")
    parser.add_argument("--sweep-max", type=int, default=2048,
                        help="largest radius in the sweep (default 2048)")
    args = parser.parse_args()

    worst = grid_study(args.radius)
    radius_sweep(args.sweep_max)
    if worst >= 1.0:
        raise SystemExit("bound violated somewhere on the grid")
    print("bound held everywhere")


if __name__ == "__main__":
    main()
