#!/usr/bin/env python3
"""Walk through the period computation at one parameter point: AGM periods of
the two complementary elliptic quotients, the 2x4 Prym period matrix, the
product-to-Prym reduction trace, and the Riemann-relation residuals.

Usage: python3 scripts/period_demo.py [--a A --b B] [--bits N]
"""

import argparse
import sys

import mpmath

from kleinprym.algebra import parse_rational
from kleinprym.family import CurveLabel, check_domain, curve_equation, j_invariant
from kleinprym.periods import (
    analytic_j,
    elliptic_periods_agm,
    product_to_prym_reduction,
    prym_period_matrix,
    riemann_check,
)


def show(label, matrix):
    print(label)
    for row in matrix:
        cells = ", ".join(mpmath.nstr(e.to_mpc(), 8) for e in row)
        print(f"  [{cells}]")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a", default="0")
    parser.add_argument("--b", default="1")
    parser.add_argument("--bits", type=int, default=192)
    args = parser.parse_args()

    params = check_domain(parse_rational(args.a), parse_rational(args.b))
    print(f"parameters (a, b) = ({params.a}, {params.b}), {args.bits} bits\n")

    taus = {}
    for label in (CurveLabel.E_t, CurveLabel.E_st):
        model = curve_equation(label, params)
        pair = elliptic_periods_agm(model, args.bits)
        taus[label] = pair.tau
        exact = j_invariant(model)
        approx = analytic_j(pair.tau, args.bits)
        print(f"{label.value}: tau = {mpmath.nstr(pair.tau.to_mpc(), 10)}")
        print(f"  exact j    = {exact}")
        print(f"  analytic j = {mpmath.nstr(approx.to_mpc(), 12)}\n")

    z1, z2 = taus[CurveLabel.E_t], taus[CurveLabel.E_st]
    trace = product_to_prym_reduction(z1, z2)
    show("product matrix (f1, f2, e1, e2):", trace.product_matrix)
    show("after basis change f2'=f1+f2, e1'=e1-e2:", trace.basis_changed)
    show("after quotient by e1'/2:", trace.after_quotient)
    show("final Prym period matrix:", trace.final)

    matrix = prym_period_matrix(z1, z2)
    residual, min_eig = riemann_check(matrix)
    print(f"\nRiemann symmetry residual: {mpmath.nstr(residual, 5)}")
    print(f"smallest eigenvalue of the Hermitian form: {mpmath.nstr(min_eig, 8)}")
    return 0 if min_eig > 0 else 1


if __name__ == "__main__":
    sys.exit(main())
