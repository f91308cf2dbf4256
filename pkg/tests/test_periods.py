import mpmath
import pytest

from kleinprym.algebra import ComplexApprox, Polynomial
from kleinprym.errors import ArgumentError, DomainError
from kleinprym.family import CurveLabel, check_domain, curve_equation, j_invariant
from kleinprym.periods import (
    PrymPeriodMatrix,
    analytic_j,
    elliptic_periods_agm,
    optimal_agm,
    product_to_prym_reduction,
    prym_period_matrix,
    riemann_check,
)

BITS = 192


def model_from_coeffs(*coeffs):
    from kleinprym.family import HyperellipticModel
    return HyperellipticModel.from_rhs(Polynomial(coeffs))


def close(x, y, bits=BITS, slack=24):
    return mpmath.fabs(mpmath.mpc(x) - mpmath.mpc(y)) < mpmath.ldexp(1, -bits + slack)


def test_agm_fixed_point_and_classical_value():
    assert optimal_agm(1, 1, 128) == 1
    with mpmath.workprec(160):
        got = optimal_agm(mpmath.sqrt(2), 1, 128)
        assert close(got, mpmath.agm(mpmath.sqrt(2), 1), 128)


def test_lemniscatic_real_period():
    model = model_from_coeffs(0, -1, 0, 1)  # y^2 = x^3 - x
    pair = elliptic_periods_agm(model, BITS)
    with mpmath.workprec(BITS + 32):
        expected = mpmath.pi / mpmath.agm(mpmath.sqrt(2), 1)
        assert close(mpmath.fabs(pair.omega1.imag), 0)
        assert close(mpmath.fabs(pair.omega1.real), expected)
    assert pair.tau.imag > 0
    assert close(analytic_j(pair.tau, BITS).to_mpc(), 1728)


def test_cm_quartic_twin():
    model = model_from_coeffs(0, 1, 0, 1)  # y^2 = x^3 + x, same CM point
    pair = elliptic_periods_agm(model, BITS)
    assert close(analytic_j(pair.tau, BITS).to_mpc(), 1728)


def test_twist_leaves_tau_unchanged():
    base = elliptic_periods_agm(model_from_coeffs(0, -1, 0, 1), BITS)
    twisted = elliptic_periods_agm(model_from_coeffs(0, -16, 0, 1), BITS)
    assert close(base.tau.to_mpc(), twisted.tau.to_mpc())


def test_precision_stability():
    model = curve_equation(CurveLabel.E_s, check_domain(1, 3))
    lo = elliptic_periods_agm(model, 128)
    hi = elliptic_periods_agm(model, 256)
    assert mpmath.fabs(lo.tau.to_mpc() - hi.tau.to_mpc()) < mpmath.ldexp(1, -120)


def test_periods_reject_wrong_genus():
    with pytest.raises(ArgumentError):
        elliptic_periods_agm(curve_equation(CurveLabel.Ctilde, check_domain(0, 1)), BITS)


def test_analytic_j_classical_values():
    i = ComplexApprox.from_value(mpmath.mpc(0, 1), BITS)
    assert close(analytic_j(i, BITS).to_mpc(), 1728)
    with mpmath.workprec(BITS + 32):
        rho = mpmath.mpc(1, mpmath.sqrt(3)) / 2
    assert close(analytic_j(ComplexApprox.from_value(rho, BITS), BITS).to_mpc(), 0)


def test_analytic_j_rejects_lower_half_plane():
    with pytest.raises(DomainError):
        analytic_j(ComplexApprox.from_value(mpmath.mpc(0, -1), BITS), BITS)


def test_analytic_j_matches_exact_j_on_family():
    params = check_domain(1, 3)
    for label in (CurveLabel.E_t, CurveLabel.E_is_it):
        model = curve_equation(label, params)
        pair = elliptic_periods_agm(model, BITS)
        exact = j_invariant(model)
        with mpmath.workprec(BITS):
            target = mpmath.mpf(exact.numerator) / exact.denominator
        assert close(analytic_j(pair.tau, BITS).to_mpc(), target, slack=48)


def _i(bits=BITS):
    return ComplexApprox.from_value(mpmath.mpc(0, 1), bits)


def test_prym_matrix_substitution():
    m = prym_period_matrix(_i(), _i())
    rows = m.to_mpc_rows()
    assert rows[0] == [mpmath.mpc(0, 1), mpmath.mpc(0, 1), 1, 0]
    assert rows[1] == [mpmath.mpc(0, 1), mpmath.mpc(0, 2), 0, 2]
    assert m.polarization == (1, 2)


def test_prym_matrix_rejects_lower_half_plane():
    with pytest.raises(DomainError):
        prym_period_matrix(_i(), ComplexApprox.from_value(mpmath.mpc(0, -1), BITS))


def test_riemann_check_square_lattice():
    residual, min_eig = riemann_check(prym_period_matrix(_i(), _i()))
    assert residual < mpmath.ldexp(1, -BITS + 16)
    # 2 Im Z = ((2,2),(2,4)), eigenvalues 3 +- sqrt(5)
    with mpmath.workprec(BITS):
        assert close(min_eig, 3 - mpmath.sqrt(5), slack=32)


def test_riemann_check_flags_indefinite_matrix():
    i = mpmath.mpc(0, 1)
    rows = ((i, i, 1, 0), (i, mpmath.mpc(0), 0, 2))  # z2 = -i breaks positivity
    bad = PrymPeriodMatrix(tuple(
        tuple(ComplexApprox.from_value(e, BITS) for e in row) for row in rows))
    _, min_eig = riemann_check(bad)
    assert min_eig < 0


def test_embedding_columns_are_lattice_vectors():
    z1 = _i()
    z2 = ComplexApprox.from_value(mpmath.mpc(0, 2), BITS)
    rows = prym_period_matrix(z1, z2).to_mpc_rows()
    col = lambda c: mpmath.matrix([rows[0][c], rows[1][c]])
    # z1 * (1,1) is column 1 and 2 * (1,1) equals 2*col3 + col4
    assert close(z1.to_mpc() * 1 - rows[0][0], 0) and close(z1.to_mpc() - rows[1][0], 0)
    assert close(2 - (2 * rows[0][2] + rows[0][3]), 0)
    assert close(2 - (2 * rows[1][2] + rows[1][3]), 0)


def test_reduction_trace_matches_documented_matrices():
    z1 = _i()
    z2 = ComplexApprox.from_value(mpmath.mpc("0.5", "1.5"), BITS)
    trace = product_to_prym_reduction(z1, z2)
    w1, w2 = z1.to_mpc(), z2.to_mpc()
    mid = [[e.to_mpc() for e in row] for row in trace.after_quotient]
    assert mid[0] == [w1, w1, 1, 0]
    assert mid[1] == [0, w2, -1, 2]
    final = [[e.to_mpc() for e in row] for row in trace.final]
    expected = prym_period_matrix(z1, z2).to_mpc_rows()
    assert final == expected
    assert trace.basis_change_symplectic


def test_report_shape():
    from kleinprym.periods import periods_report
    report = periods_report(check_domain(0, 1), 128)
    assert set(report["periods"]) == {l.value for l in
                                      (CurveLabel.E_s, CurveLabel.E_t, CurveLabel.E_st,
                                       CurveLabel.E_is_t, CurveLabel.E_s_it,
                                       CurveLabel.E_is_it)}
    assert all(v < 1e-8 for v in report["analytic_vs_exact_j"].values())
    assert report["riemann_min_eigenvalue"] > 0
    assert report["reduction_symplectic"]
