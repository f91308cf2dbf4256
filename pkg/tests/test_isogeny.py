from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kleinprym.errors import OrderError, PointError, SingularError
from kleinprym.family import CurveLabel, ELLIPTIC_LABELS, check_domain, \
    curve_equation, j_invariant
from kleinprym.isogeny import (
    KernelPoint,
    WeierstrassCurve,
    add_points,
    dual_nonisomorphism_check,
    j_weierstrass,
    point_order,
    quartic_to_weierstrass,
    scalar_multiple,
    velu_quotient,
)


def test_singular_curve_rejected():
    with pytest.raises(SingularError):
        WeierstrassCurve.make(-3, 2)  # 4*(-27) + 27*4 = 0


def test_from_string_and_contains():
    E = WeierstrassCurve.from_string("1,0")
    assert E.contains(Fraction(0), Fraction(0))
    assert not E.contains(Fraction(1), Fraction(1))
    assert E.to_string() == "1,0"


def test_group_law_basics():
    E = WeierstrassCurve.make(-7, -6)  # roots -1, -2, 3
    T = (Fraction(3), Fraction(0))
    assert add_points(E, T, T) is None
    assert add_points(E, None, T) == T
    assert point_order(E, T) == 2
    assert scalar_multiple(E, 2, T) is None
    assert scalar_multiple(E, 3, T) == T


def test_kernel_point_validation():
    E = WeierstrassCurve.make(1, 0)
    with pytest.raises(PointError):
        KernelPoint.on_curve(E, 1, 1)
    with pytest.raises(OrderError):
        KernelPoint.on_curve(E, 0, 0, order=3)
    P = KernelPoint.from_string(E, "0,0")
    assert P.order == 2


def test_velu_reference_two_isogeny():
    E = WeierstrassCurve.make(1, 0)  # y^2 = x^3 + x
    image = velu_quotient(E, KernelPoint.on_curve(E, 0, 0))
    assert (image.p, image.q) == (-4, 0)
    assert j_weierstrass(image) == 1728


@given(st.integers(-6, 6).filter(lambda u: u != 0))
def test_j_is_twist_invariant(u):
    E = WeierstrassCurve.make(-7, -6)
    twist = WeierstrassCurve.make(E.p * u ** 4, E.q * u ** 6)
    assert j_weierstrass(twist) == j_weierstrass(E)


domain_params = st.tuples(
    st.fractions(min_value=-10, max_value=10, max_denominator=5),
    st.fractions(min_value=-10, max_value=10, max_denominator=5),
).filter(lambda ab: ab[0] != ab[1] and ab[0] ** 2 != 4 and ab[1] ** 2 != 4
         ).map(lambda ab: check_domain(*ab))


@given(domain_params)
@settings(max_examples=25)
def test_quartic_to_weierstrass_preserves_j(params):
    for label in ELLIPTIC_LABELS:
        model = curve_equation(label, params)
        assert j_weierstrass(quartic_to_weierstrass(model)) == j_invariant(model)


def _curve_from_roots(r1, r2, r3):
    # short form needs r1 + r2 + r3 = 0
    assert r1 + r2 + r3 == 0
    p = r1 * r2 + r1 * r3 + r2 * r3
    q = -r1 * r2 * r3
    return WeierstrassCurve.make(p, q)


@given(st.tuples(st.integers(-8, 8), st.integers(-8, 8)))
@settings(max_examples=40)
def test_dual_two_isogeny_returns_to_j(roots):
    r1, r2 = (Fraction(r) for r in roots)
    r3 = -r1 - r2
    if len({r1, r2, r3}) < 3:
        return
    E = _curve_from_roots(r1, r2, r3)
    image = velu_quotient(E, KernelPoint.on_curve(E, r1, 0))
    # image x-coordinate of the 2-torsion point (r2, 0) under the isogeny
    x_img = r2 + (3 * r1 * r1 + E.p) / (r2 - r1)
    T = KernelPoint.on_curve(image, x_img, 0)
    assert j_weierstrass(velu_quotient(image, T)) == j_weierstrass(E)


def test_certificate_cm_point_has_no_conclusion():
    E = WeierstrassCurve.make(1, 0)
    P = KernelPoint.on_curve(E, 0, 0)
    cert = dual_nonisomorphism_check(E, P, E, P, True)
    assert not cert["premise_holds"]
    assert cert["conclusion"] == "no conclusion: both quotients preserve j"


def test_certificate_generic_pair():
    E = WeierstrassCurve.make(-7, -6)
    F = WeierstrassCurve.make(-19, -30)
    cert = dual_nonisomorphism_check(E, KernelPoint.on_curve(E, 3, 0),
                                     F, KernelPoint.on_curve(F, 5, 0), True)
    assert cert["premise_holds"]
    assert cert["nonisogenous_evidence"]["j_values_differ"]
    assert cert["conclusion"] == "A is not isomorphic to its dual"


def test_certificate_gates_on_assertion():
    E = WeierstrassCurve.make(-7, -6)
    F = WeierstrassCurve.make(-19, -30)
    cert = dual_nonisomorphism_check(E, KernelPoint.on_curve(E, 3, 0),
                                     F, KernelPoint.on_curve(F, 5, 0), False)
    assert cert["conclusion"] == "hypothesis unverified: non-isogeny not asserted"


def test_certificate_rejects_order_mismatch():
    E = WeierstrassCurve.make(-7, -6)
    F = WeierstrassCurve.make(0, 1)
    P = KernelPoint.on_curve(E, 3, 0)   # order 2
    Q = KernelPoint.on_curve(F, 0, 1)   # order 3
    assert (P.order, Q.order) == (2, 3)
    with pytest.raises(OrderError):
        dual_nonisomorphism_check(E, P, F, Q, True)
