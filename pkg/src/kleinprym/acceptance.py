"""The acceptance suite: nine self-contained criteria with deterministic
random sampling and wall-clock budgets.  `selftest` on the command line and
the test suite both call `run_all`, so a green selftest and a green test run
certify the same thing.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DomainError, PhiUndefined
from .family import (
    CurveLabel,
    InvolutionLabel,
    QUOTIENT_LABELS,
    ELLIPTIC_LABELS,
    check_domain,
    curve_equation,
    fixed_point_count,
    j_invariant,
    quotient_map,
    verify_quotient_identity,
)
from .projline import FULLY_ORDERED, MobiusMap, normalize_tuple, tuple_of_params
from .moduli import phi_consistency_report, phi_params, prym_fiber_invariants
from .torsion import duality_chain, example_surj_report
from .isogeny import (
    KernelPoint,
    WeierstrassCurve,
    dual_nonisomorphism_check,
    j_weierstrass,
    velu_quotient,
)
from .periods import (
    analytic_j,
    elliptic_periods_agm,
    product_to_prym_reduction,
    prym_period_matrix,
    riemann_check,
)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float
    budget: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"[{status}] criterion {self.number}: {self.name} "
                f"({self.elapsed:.2f}s / {self.budget:.0f}s) - {self.detail}")


def _random_params(rng: random.Random, require_phi: bool = False):
    while True:
        a = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        b = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        try:
            p = check_domain(a, b)
        except DomainError:
            continue
        if require_phi and not p.phi_defined:
            continue
        return p


def _random_mobius(rng: random.Random) -> MobiusMap:
    while True:
        es = [rng.randint(-9, 9) for _ in range(4)]
        if es[0] * es[3] - es[1] * es[2] != 0:
            return MobiusMap(*es)


def _run(number, name, budget, body) -> CriterionResult:
    start = time.perf_counter()
    try:
        ok, detail = body()
    except Exception as exc:  # an acceptance criterion must never raise
        elapsed = time.perf_counter() - start
        return CriterionResult(number, name, False,
                               f"raised {type(exc).__name__}: {exc}", elapsed, budget)
    elapsed = time.perf_counter() - start
    if ok and elapsed >= budget:
        ok, detail = False, f"over budget ({elapsed:.2f}s >= {budget:.0f}s)"
    return CriterionResult(number, name, ok, detail, elapsed, budget)


# --------------------------------------------------------------------------


def criterion_1() -> CriterionResult:
    def body():
        rng = random.Random(101)
        for i in range(200):
            params = _random_params(rng)
            m = _random_mobius(rng)
            pushed = tuple_of_params(params).apply(m)
            back = normalize_tuple(pushed, FULLY_ORDERED)[0].params
            if back != params:
                return False, f"round-trip failed at sample {i}: {params} -> {back}"
        return True, "200 random round-trips exact under the ordered convention"

    return _run(1, "round-trip normalization", 5.0, body)


def criterion_2() -> CriterionResult:
    def body():
        rng = random.Random(102)
        for i in range(25):
            params = _random_params(rng)
            for label in QUOTIENT_LABELS:
                if not verify_quotient_identity(quotient_map(label, params), params):
                    return False, f"identity failed for {label.value} at {params}"
        return True, "9 quotient-map identities exact at 25 random points"

    return _run(2, "quotient-equation verification", 5.0, body)


_PROFILE = (
    (InvolutionLabel.sigma, 4),
    (InvolutionLabel.tau, 4),
    (InvolutionLabel.sigma_tau, 4),
    (InvolutionLabel.iota_sigma, 0),
    (InvolutionLabel.iota_tau, 0),
    (InvolutionLabel.iota_sigma_tau, 0),
)


def criterion_3() -> CriterionResult:
    def body():
        rng = random.Random(103)
        for _ in range(50):
            params = _random_params(rng)
            for inv, expected in _PROFILE:
                count, _ = fixed_point_count(inv, params)
                if count != expected:
                    return False, (f"{inv.value} has {count} fixed points at "
                                   f"{params}, expected {expected}")
        return True, "profile (4,4,4,0,0,0) at 50 random points"

    return _run(3, "fixed-point profile", 2.0, body)


def criterion_4() -> CriterionResult:
    def body():
        rng = random.Random(104)
        for _ in range(200):
            params = _random_params(rng, require_phi=True)
            twice = phi_params(phi_params(params))
            if twice != params.swapped():
                return False, f"phi^2 != swap at {params}: got {twice}"
        if phi_params(check_domain(0, 1)) != check_domain(-6, -10):
            return False, "anchor phi(0,1) != (-6,-10)"
        if phi_params(check_domain(1, 3)) != check_domain(-1, -3):
            return False, "anchor phi(1,3) != (-1,-3)"
        try:
            phi_params(check_domain(1, -1))
        except PhiUndefined:
            pass
        else:
            return False, "phi(1,-1) did not raise PhiUndefined"
        return True, "phi^2 = swap on 200 points; anchors and a+b=0 error exact"

    return _run(4, "involution suite", 1.0, body)


def criterion_5() -> CriterionResult:
    def body():
        rng = random.Random(105)
        for _ in range(100):
            params = _random_params(rng, require_phi=True)
            if prym_fiber_invariants(params) != prym_fiber_invariants(phi_params(params)):
                return False, f"fiber invariants differ across phi at {params}"
        expected_bottom = tuple(sorted((Fraction(1728), Fraction(21952, 9))))
        for a, b in ((0, 1), (-6, -10)):
            inv = prym_fiber_invariants(check_domain(a, b))
            if inv.j_pair_bottom != expected_bottom:
                return False, f"bottom j-pair anchor failed at ({a},{b}): {inv.j_pair_bottom}"
        j1 = j_invariant(curve_equation(CurveLabel.E_t, check_domain(0, 1)))
        j2 = j_invariant(curve_equation(CurveLabel.E_st, check_domain(-6, -10)))
        if not (j1 == j2 == 287496):
            return False, f"j anchor failed: {j1}, {j2}"
        return True, "both j-pairs phi-invariant at 100 points; anchors exact"

    return _run(5, "Prym fiber invariance", 10.0, body)


def criterion_6() -> CriterionResult:
    def body():
        surj = example_surj_report()
        if not surj["all_ok"]:
            bad = [k for k, v in surj["checks"].items() if not v]
            return False, f"square-lattice example failed: {bad}"
        # the four classes {0, e1, f1+f2, e1+f1+f2}, lex-least representatives
        expected_kphi = [
            ["0", "0", "0", "0"],
            ["0", "0", "1/2", "1/2"],
            ["0", "1/2", "0", "1/2"],
            ["0", "1/2", "1/2", "0"],
        ]
        if surj["ker_phi_A"] != expected_kphi:
            return False, f"ker phi_A list mismatch: {surj['ker_phi_A']}"
        for d in range(2, 9):
            chain = duality_chain(d)
            core = ("ker_phi_H_order_is_d_squared", "E_cap_ker_phi_H_is_P",
                    "F_cap_ker_phi_H_is_Q")
            if not all(chain["checks"][k] for k in core):
                return False, f"kernel checks failed at d={d}"
            if d <= 6 and not chain["all_ok"]:
                bad = [k for k, v in chain["checks"].items() if not v]
                return False, f"duality chain failed at d={d}: {bad}"
        return True, ("square-lattice kernel list exact; |ker phi_H| = d^2 and factor "
                      "intersections for d in 2..8; duality chain for d in 2..6")

    return _run(6, "torsion suite", 30.0, body)


def criterion_7() -> CriterionResult:
    def body():
        cm = WeierstrassCurve.make(1, 0)  # y^2 = x^3 + x
        origin = KernelPoint.on_curve(cm, 0, 0)
        quotient = velu_quotient(cm, origin)
        if j_weierstrass(quotient) != 1728:
            return False, f"CM quotient j = {j_weierstrass(quotient)}, expected 1728"
        cert_cm = dual_nonisomorphism_check(cm, origin, cm, origin, True)
        if cert_cm["premise_holds"]:
            return False, "premise unexpectedly holds at the CM point"
        E = WeierstrassCurve.make(-7, -6)    # roots -1, -2, 3
        F = WeierstrassCurve.make(-19, -30)  # roots -3, -2, 5
        cert = dual_nonisomorphism_check(
            E, KernelPoint.on_curve(E, 3, 0), F, KernelPoint.on_curve(F, 5, 0), True)
        if not cert["premise_holds"]:
            return False, "premise fails for the generic 2-torsion pair"
        if cert["conclusion"] != "A is not isomorphic to its dual":
            return False, f"unexpected conclusion: {cert['conclusion']}"
        return True, "CM point premise fails with j = 1728; generic pair certifies"

    return _run(7, "Velu / duality certificate", 1.0, body)


def criterion_8() -> CriterionResult:
    def body():
        bits = 256
        rng = random.Random(108)
        for i in range(20):
            params = _random_params(rng)
            for label in ELLIPTIC_LABELS:
                model = curve_equation(label, params)
                pair = elliptic_periods_agm(model, bits)
                approx = analytic_j(pair.tau, bits)
                exact = j_invariant(model)
                with mpmath.workprec(bits):
                    delta = mpmath.fabs(
                        approx.to_mpc()
                        - mpmath.mpf(exact.numerator) / exact.denominator)
                if delta >= 1e-8:
                    return False, (f"|analytic_j - exact_j| = {mpmath.nstr(delta, 5)} "
                                   f"for {label.value} at {params}")

        params = check_domain(0, 1)
        z1 = elliptic_periods_agm(curve_equation(CurveLabel.E_t, params), bits).tau
        z2 = elliptic_periods_agm(curve_equation(CurveLabel.E_st, params), bits).tau
        matrix = prym_period_matrix(z1, z2)
        residual, min_eig = riemann_check(matrix)
        if residual >= mpmath.ldexp(1, -bits + 16):
            return False, f"Riemann symmetry residual {mpmath.nstr(residual, 5)}"
        if min_eig <= 0:
            return False, f"Riemann form not positive definite: {mpmath.nstr(min_eig, 5)}"

        trace = product_to_prym_reduction(z1, z2)
        w1, w2 = z1.to_mpc(), z2.to_mpc()
        expected_mid = ((w1, w1, 1, 0), (0, w2, -1, 2))
        tol = mpmath.ldexp(1, -bits + 16)
        for r in range(2):
            for c in range(4):
                mid = trace.after_quotient[r][c].to_mpc()
                fin = trace.final[r][c].to_mpc()
                if mpmath.fabs(mid - expected_mid[r][c]) >= tol:
                    return False, f"intermediate matrix mismatch at ({r},{c})"
                if mpmath.fabs(fin - matrix.entries[r][c].to_mpc()) >= tol:
                    return False, f"final matrix mismatch at ({r},{c})"
        if not trace.basis_change_symplectic:
            return False, "basis change is not symplectic for the (2,2) form"
        return True, ("six quotients x 20 points within 1e-8 at 256 bits; Riemann "
                      "relations and reduction trace verified")

    return _run(8, "periods", 60.0, body)


def criterion_9() -> CriterionResult:
    def body():
        report = phi_consistency_report(check_domain(1, 3))
        if report["raw_tuple_normalized_ordered"] != [["1", "3"]]:
            return False, ("raw tuple form did not normalise to (1,3): "
                           f"{report['raw_tuple_normalized_ordered']}")
        if report["phi_params"] != ["-1", "-3"]:
            return False, f"parameter form gave {report['phi_params']}, expected (-1,-3)"
        expected_flags = [
            "raw-tuple-form-normalizes-to-input",
            "printed-matrix-disagrees-with-parameter-form",
        ]
        if report["inconsistency_flags"] != expected_flags:
            return False, f"flag set mismatch: {report['inconsistency_flags']}"
        if not report["fiber_invariants_match"]:
            return False, "fiber invariants unexpectedly differ across phi at (1,3)"
        return True, "exactly the two documented inconsistencies flagged at (1,3)"

    return _run(9, "consistency diagnostics", 1.0, body)


ALL_CRITERIA = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9,
)


def run_all():
    return [c() for c in ALL_CRITERIA]
