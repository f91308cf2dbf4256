"""The deck involution phi on the parameter space, its fibre invariants, and
diagnostics comparing alternative presentations of phi.

The operative definition is the parameter form
    phi(a, b) = ((2b - 2a - 8)/(a + b), (2a - 2b - 8)/(a + b)),
which is an involution on unordered pairs and preserves both unordered
j-invariant pairs attached to a fibre.  The raw 5-tuple form and the 2x2
matrix that allegedly connects the two survive only inside the consistency
report: under order-preserving normalisation the raw tuple form is the
identity on parameters, and the matrix undoes it rather than producing the
parameter form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgumentError, DegenerateConfiguration, PhiUndefined
from .algebra import format_rational
from .family import CurveLabel, FamilyParams, check_domain, curve_equation, j_invariant
from .projline import (
    MarkedTuple,
    MarkingConvention,
    MobiusMap,
    ProjectivePoint,
    normalize_tuple,
    tuple_of_params,
    tuples_equivalent,
)


def phi_params(params: FamilyParams) -> FamilyParams:
    """The deck involution on parameters; defined iff a + b != 0.

    The image always lies back in the smooth domain, and applying phi twice
    returns the swapped pair (b, a).
    """
    a, b = params.a, params.b
    s = a + b
    if s == 0:
        raise PhiUndefined("phi undefined: a + b = 0")
    return check_domain((2 * b - 2 * a - 8) / s, (2 * a - 2 * b - 8) / s)


def _params_of_canonical(t: MarkedTuple) -> FamilyParams:
    from .projline import CANONICAL_TRIPLE

    if t.triple != CANONICAL_TRIPLE or t.distinguished_index != 0:
        raise ArgumentError("tuple is not in the canonical frame")
    if any(p.is_infinity for p in t.pair):
        raise ArgumentError("tuple is not in the canonical frame")
    return check_domain(-t.pair[0].affine_value(), -t.pair[1].affine_value())


def phi_tuple_raw(t: MarkedTuple) -> MarkedTuple:
    """The literal un-normalised image tuple
    ([-b:1], [-a:1]; [1:0], [-2-a-b:1], [-2:1])."""
    params = _params_of_canonical(t)
    a, b = params.a, params.b
    if a + b == 0:
        raise DegenerateConfiguration("image triple degenerates: -2-a-b = -2")
    return MarkedTuple(
        (ProjectivePoint.affine(-b), ProjectivePoint.affine(-a)),
        (
            ProjectivePoint.infinity(),
            ProjectivePoint.affine(-2 - a - b),
            ProjectivePoint.affine(-2),
        ),
        0,
    )


def printed_matrix(params: FamilyParams) -> MobiusMap:
    """The alternative 2x2 matrix presentation ((4, 8+2a+2b), (0, -a-b))."""
    a, b = params.a, params.b
    if a + b == 0:
        raise PhiUndefined("phi undefined: a + b = 0")
    return MobiusMap(4, 8 + 2 * a + 2 * b, 0, -a - b)


@dataclass(frozen=True)
class PrymFiberInvariants:
    """The two unordered j-invariant pairs attached to a parameter point:
    {j(E_t), j(E_st)} and {j(E_is_t), j(E_is_it)}, each stored sorted."""

    j_pair_top: tuple
    j_pair_bottom: tuple


def prym_fiber_invariants(params: FamilyParams) -> PrymFiberInvariants:
    def j(label):
        return j_invariant(curve_equation(label, params))

    top = tuple(sorted((j(CurveLabel.E_t), j(CurveLabel.E_st))))
    bottom = tuple(sorted((j(CurveLabel.E_is_t), j(CurveLabel.E_is_it))))
    return PrymFiberInvariants(top, bottom)


CONVENTION_NAMES = ("ordered", "pair-unordered", "all-unordered")


def phi_consistency_report(params: FamilyParams,
                           conv: MarkingConvention = MarkingConvention()) -> dict:
    """Structured comparison of the three presentations of phi.

    Flags exactly the two documented inconsistencies: the raw tuple form
    normalises back to the input parameters, and the printed matrix undoes
    the raw form instead of reproducing the parameter form.
    """
    if not params.phi_defined:
        raise PhiUndefined("phi undefined: a + b = 0")

    t = tuple_of_params(params)
    image = phi_params(params)
    raw = phi_tuple_raw(t)

    ordered = MarkingConvention(pair_ordered=True, triple_tail_ordered=True)
    raw_normalized = [r.params for r in normalize_tuple(raw, ordered)]
    raw_normalized_conv = [r.params for r in normalize_tuple(raw, conv)]

    matrix = printed_matrix(params)
    matrix_image = _params_of_canonical(raw.apply(matrix))

    eq1_fixes_parameters = raw_normalized[0] == params
    matrix_matches_eq2 = matrix_image == image
    matrix_returns_input = matrix_image == params

    flags = []
    if eq1_fixes_parameters:
        flags.append("raw-tuple-form-normalizes-to-input")
    if not matrix_matches_eq2:
        flags.append("printed-matrix-disagrees-with-parameter-form")

    verdicts = {}
    phi_t = tuple_of_params(image)
    for name in CONVENTION_NAMES:
        verdicts[name] = tuples_equivalent(t, phi_t, MarkingConvention.from_name(name))

    def fmt_params(p):
        return [format_rational(p.a), format_rational(p.b)]

    inv_here = prym_fiber_invariants(params)
    inv_image = prym_fiber_invariants(image)
    return {
        "params": fmt_params(params),
        "phi_params": fmt_params(image),
        "raw_tuple_image": raw.to_string(),
        "raw_tuple_normalized_ordered": [fmt_params(p) for p in raw_normalized],
        "raw_tuple_normalized_requested": [fmt_params(p) for p in raw_normalized_conv],
        "printed_matrix_image": fmt_params(matrix_image),
        "printed_matrix_returns_input": matrix_returns_input,
        "printed_matrix_matches_parameter_form": matrix_matches_eq2,
        "fiber_invariants_match": inv_here == inv_image,
        "equivalence_verdicts": verdicts,
        "inconsistency_flags": flags,
    }


def moduli_report(params: FamilyParams) -> dict:
    image = phi_params(params)
    inv = prym_fiber_invariants(params)
    return {
        "params": [format_rational(params.a), format_rational(params.b)],
        "phi_params": [format_rational(image.a), format_rational(image.b)],
        "j_pair_top": [format_rational(j) for j in inv.j_pair_top],
        "j_pair_bottom": [format_rational(j) for j in inv.j_pair_bottom],
    }
