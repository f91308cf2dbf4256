from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from kleinprym.errors import PhiUndefined
from kleinprym.family import check_domain
from kleinprym.moduli import (
    phi_consistency_report,
    phi_params,
    phi_tuple_raw,
    printed_matrix,
    prym_fiber_invariants,
)
from kleinprym.projline import FULLY_ORDERED, normalize_tuple, tuple_of_params

domain_params = st.tuples(
    st.fractions(min_value=-15, max_value=15, max_denominator=6),
    st.fractions(min_value=-15, max_value=15, max_denominator=6),
).filter(lambda ab: ab[0] != ab[1] and ab[0] ** 2 != 4 and ab[1] ** 2 != 4
         ).map(lambda ab: check_domain(*ab))


def test_phi_anchors():
    assert phi_params(check_domain(0, 1)) == check_domain(-6, -10)
    assert phi_params(check_domain(1, 3)) == check_domain(-1, -3)


def test_phi_undefined_on_antidiagonal():
    with pytest.raises(PhiUndefined):
        phi_params(check_domain(1, -1))


@given(domain_params)
def test_phi_squared_is_pair_swap(params):
    assume(params.phi_defined)
    assert phi_params(phi_params(params)) == params.swapped()


@given(domain_params)
def test_phi_image_stays_in_domain(params):
    assume(params.phi_defined)
    image = phi_params(params)  # check_domain inside would raise otherwise
    assert image.a != image.b


@given(domain_params)
def test_fiber_invariants_are_phi_invariant(params):
    assume(params.phi_defined)
    assert prym_fiber_invariants(params) == prym_fiber_invariants(phi_params(params))


def test_fiber_invariant_anchor():
    inv = prym_fiber_invariants(check_domain(0, 1))
    assert inv.j_pair_bottom == tuple(sorted((Fraction(1728), Fraction(21952, 9))))
    assert Fraction(287496) in inv.j_pair_top


def test_raw_tuple_form_normalizes_back_to_input():
    params = check_domain(1, 3)
    raw = phi_tuple_raw(tuple_of_params(params))
    assert normalize_tuple(raw, FULLY_ORDERED)[0].params == params


def test_printed_matrix_undoes_raw_tuple_form():
    params = check_domain(1, 3)
    raw = phi_tuple_raw(tuple_of_params(params))
    moved = raw.apply(printed_matrix(params))
    # the matrix carries the raw image back to the canonical frame at (1,3)
    assert normalize_tuple(moved, FULLY_ORDERED)[0].params == params


def test_consistency_report_flags_exactly_two_issues():
    report = phi_consistency_report(check_domain(1, 3))
    assert report["raw_tuple_normalized_ordered"] == [["1", "3"]]
    assert report["phi_params"] == ["-1", "-3"]
    assert report["printed_matrix_returns_input"]
    assert not report["printed_matrix_matches_parameter_form"]
    assert report["fiber_invariants_match"]
    assert report["inconsistency_flags"] == [
        "raw-tuple-form-normalizes-to-input",
        "printed-matrix-disagrees-with-parameter-form",
    ]


def test_consistency_report_requires_phi_defined():
    with pytest.raises(PhiUndefined):
        phi_consistency_report(check_domain(1, -1))
