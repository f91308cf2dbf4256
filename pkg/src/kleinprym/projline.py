"""The projective line over the rationals: points, Moebius maps, cross-ratios,
and the marked 5-tuple calculus (a pair, a triple, a distinguished triple point).

The canonical frame for the distinguished triple is ([1:0], [2:1], [-2:1]);
every equivalence decision routes through normalisation to that frame.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd

from .errors import ArgumentError, DegenerateConfiguration
from .algebra import format_rational, parse_rational


class ProjectivePoint:
    """A point [x:y] of P^1(Q), stored canonically: y = 1, or [1:0] for infinity."""

    __slots__ = ("x", "y")

    def __init__(self, x, y=1):
        x = Fraction(x)
        y = Fraction(y)
        if x == 0 and y == 0:
            raise ArgumentError("[0:0] is not a projective point")
        if y == 0:
            self.x, self.y = Fraction(1), Fraction(0)
        else:
            self.x, self.y = x / y, Fraction(1)

    @classmethod
    def infinity(cls) -> "ProjectivePoint":
        return cls(1, 0)

    @classmethod
    def affine(cls, value) -> "ProjectivePoint":
        return cls(Fraction(value), 1)

    @property
    def is_infinity(self) -> bool:
        return self.y == 0

    def affine_value(self) -> Fraction:
        if self.is_infinity:
            raise ArgumentError("the point at infinity has no affine value")
        return self.x

    def __eq__(self, other):
        if isinstance(other, ProjectivePoint):
            return self.x == other.x and self.y == other.y
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y))

    def __repr__(self):
        return f"[{format_rational(self.x)}:{format_rational(self.y)}]"

    def to_string(self) -> str:
        return "inf" if self.is_infinity else format_rational(self.x)

    @classmethod
    def from_string(cls, text: str) -> "ProjectivePoint":
        text = text.strip()
        if text in ("inf", "oo"):
            return cls.infinity()
        return cls.affine(parse_rational(text))


class MobiusMap:
    """A 2x2 rational matrix acting on P^1 by [x:y] -> [m11 x + m12 y : m21 x + m22 y]."""

    __slots__ = ("m11", "m12", "m21", "m22")

    def __init__(self, m11, m12, m21, m22):
        self.m11, self.m12, self.m21, self.m22 = (Fraction(v) for v in (m11, m12, m21, m22))
        if self.determinant() == 0:
            raise DegenerateConfiguration("Moebius matrix is singular")

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(1, 0, 0, 1)

    def determinant(self) -> Fraction:
        return self.m11 * self.m22 - self.m12 * self.m21

    def entries(self):
        return (self.m11, self.m12, self.m21, self.m22)

    def canonical(self) -> "MobiusMap":
        """Scale to primitive integer entries with positive first nonzero entry."""
        es = self.entries()
        denom_lcm = 1
        for e in es:
            denom_lcm = denom_lcm * e.denominator // int_gcd(denom_lcm, e.denominator)
        ints = [int(e * denom_lcm) for e in es]
        g = 0
        for v in ints:
            g = int_gcd(g, abs(v))
        ints = [v // g for v in ints]
        for v in ints:
            if v != 0:
                if v < 0:
                    ints = [-w for w in ints]
                break
        return MobiusMap(*ints)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """self after other (matrix product self * other)."""
        return MobiusMap(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def inverse(self) -> "MobiusMap":
        return MobiusMap(self.m22, -self.m12, -self.m21, self.m11)

    def __eq__(self, other):
        if isinstance(other, MobiusMap):
            return self.canonical().entries() == other.canonical().entries()
        return NotImplemented

    def __repr__(self):
        return f"MobiusMap({', '.join(format_rational(e) for e in self.entries())})"


def apply_mobius(m: MobiusMap, p: ProjectivePoint) -> ProjectivePoint:
    return ProjectivePoint(m.m11 * p.x + m.m12 * p.y, m.m21 * p.x + m.m22 * p.y)


def _require_distinct(points, context: str):
    if len(set(points)) != len(points):
        raise DegenerateConfiguration(f"repeated points in {context}")


def _frame_matrix(p1: ProjectivePoint, p2: ProjectivePoint, p3: ProjectivePoint) -> MobiusMap:
    """The map sending (p1, p2, p3) to ([0:1], [1:1], [1:0])."""
    a = p2.x * p3.y - p3.x * p2.y
    b = p2.x * p1.y - p1.x * p2.y
    return MobiusMap(p1.y * a, -p1.x * a, p3.y * b, -p3.x * b)


def mobius_through(src, dst) -> MobiusMap:
    """The unique Moebius map with src_i -> dst_i (i = 1..3), canonically scaled."""
    src = tuple(src)
    dst = tuple(dst)
    _require_distinct(src, "source triple")
    _require_distinct(dst, "destination triple")
    m = _frame_matrix(*dst).inverse().compose(_frame_matrix(*src))
    return m.canonical()


def cross_ratio(p1, p2, p3, p4) -> ProjectivePoint:
    """Cross-ratio as a point of P^1: the image of p4 under the map
    sending (p1, p2, p3) to (0, 1, infinity)."""
    _require_distinct((p1, p2, p3, p4), "cross-ratio input")
    return apply_mobius(_frame_matrix(p1, p2, p3), p4)


def klein_h_map(p: ProjectivePoint) -> ProjectivePoint:
    """The degree-4 map [x:y] -> [x^4 + y^4 : x^2 y^2], invariant under
    x -> -x and x -> 1/x."""
    return ProjectivePoint(p.x**4 + p.y**4, p.x**2 * p.y**2)


# ---------------------------------------------------------------------------
# Marked tuples
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MarkingConvention:
    """Which parts of the marking carry an ordering.

    pair_ordered: the two non-triple points are individually labelled.
    triple_tail_ordered: the two non-distinguished triple points are labelled.
    """

    pair_ordered: bool = False
    triple_tail_ordered: bool = True

    @classmethod
    def from_name(cls, name: str) -> "MarkingConvention":
        table = {
            "ordered": cls(pair_ordered=True, triple_tail_ordered=True),
            "pair-unordered": cls(pair_ordered=False, triple_tail_ordered=True),
            "all-unordered": cls(pair_ordered=False, triple_tail_ordered=False),
        }
        if name not in table:
            raise ArgumentError(f"unknown convention {name!r}")
        return table[name]


FULLY_ORDERED = MarkingConvention(pair_ordered=True, triple_tail_ordered=True)


@dataclass(frozen=True)
class MarkedTuple:
    """Five pairwise-distinct points: a pair, a triple, and a distinguished
    index into the triple."""

    pair: tuple
    triple: tuple
    distinguished_index: int = 0

    def __post_init__(self):
        if len(self.pair) != 2 or len(self.triple) != 3:
            raise ArgumentError("marked tuple needs a pair and a triple")
        if not 0 <= self.distinguished_index <= 2:
            raise ArgumentError("distinguished index out of range")
        _require_distinct(self.pair + self.triple, "marked tuple")

    @property
    def distinguished(self) -> ProjectivePoint:
        return self.triple[self.distinguished_index]

    @property
    def triple_tail(self):
        return tuple(p for i, p in enumerate(self.triple) if i != self.distinguished_index)

    def apply(self, m: MobiusMap) -> "MarkedTuple":
        return MarkedTuple(
            tuple(apply_mobius(m, p) for p in self.pair),
            tuple(apply_mobius(m, p) for p in self.triple),
            self.distinguished_index,
        )

    def to_string(self) -> str:
        pair = ",".join(p.to_string() for p in self.pair)
        triple = ",".join(p.to_string() for p in self.triple)
        return f"{pair};{triple}!{self.distinguished_index}"

    @classmethod
    def from_string(cls, text: str) -> "MarkedTuple":
        try:
            body, k = text.rsplit("!", 1)
            pair_part, triple_part = body.split(";")
            pair = tuple(ProjectivePoint.from_string(t) for t in pair_part.split(","))
            triple = tuple(ProjectivePoint.from_string(t) for t in triple_part.split(","))
            return cls(pair, triple, int(k))
        except (ValueError, IndexError) as exc:
            raise ArgumentError(f"cannot parse marked tuple {text!r}") from exc


CANONICAL_TRIPLE = (
    ProjectivePoint.infinity(),
    ProjectivePoint.affine(2),
    ProjectivePoint.affine(-2),
)


def tuple_of_params(params) -> MarkedTuple:
    """The canonical marked tuple ([-a:1], [-b:1]; [1:0], [2:1], [-2:1])."""
    return MarkedTuple(
        (ProjectivePoint.affine(-params.a), ProjectivePoint.affine(-params.b)),
        CANONICAL_TRIPLE,
        0,
    )


@dataclass(frozen=True)
class NormalizationResult:
    params: "FamilyParams"  # noqa: F821 - forward ref to family
    transform: MobiusMap


def normalize_tuple(t: MarkedTuple, conv: MarkingConvention = MarkingConvention()):
    """Normalise the triple to the canonical frame and read off the parameters.

    Returns a list of NormalizationResult: one entry when the triple tail is
    ordered, otherwise both tail assignments (parameters related by
    (a, b) -> (-a, -b)).
    """
    from .family import check_domain

    tail = t.triple_tail
    assignments = [tail] if conv.triple_tail_ordered else [tail, (tail[1], tail[0])]
    results = []
    for tl in assignments:
        m = mobius_through((t.distinguished, tl[0], tl[1]), CANONICAL_TRIPLE)
        images = [apply_mobius(m, p) for p in t.pair]
        if any(p.is_infinity for p in images):
            raise DegenerateConfiguration("pair point collides with the distinguished point")
        a = -images[0].affine_value()
        b = -images[1].affine_value()
        results.append(NormalizationResult(check_domain(a, b), m))
    return results


def _params_match(p1, p2, conv: MarkingConvention) -> bool:
    if (p1.a, p1.b) == (p2.a, p2.b):
        return True
    if not conv.pair_ordered and (p1.a, p1.b) == (p2.b, p2.a):
        return True
    return False


def tuples_equivalent(t1: MarkedTuple, t2: MarkedTuple,
                      conv: MarkingConvention = MarkingConvention()) -> bool:
    """True iff a Moebius map matches t1 to t2 respecting the convention."""
    n1 = normalize_tuple(t1, conv)
    n2 = normalize_tuple(t2, conv)
    return any(_params_match(r1.params, r2.params, conv) for r1 in n1 for r2 in n2)
