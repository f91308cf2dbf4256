"""Finite symplectic calculus on torsion of a product of two elliptic curves.

Torsion is modelled inside Q^4/Z^4 at a fixed level N, coordinates ordered
(e_E, f_E, e_F, f_F).  The Weil pairing surrogate is the standard symplectic
form scaled to take values in (1/N)Z/Z:

    <x, y> = N * (x1 y2 - x2 y1 + x3 y4 - x4 y3)  mod 1.

Orders, complements and intersections are decided by plain enumeration;
levels stay <= 12 so brute force is its own oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgumentError, LevelError, NotIsotropic

MAX_LEVEL = 12


def _mod1(v: Fraction) -> Fraction:
    return v - (v.numerator // v.denominator)


@dataclass(frozen=True, order=True)
class TorsionPoint:
    """An element of Q^4/Z^4 with denominators dividing the level."""

    coords: tuple
    level: int

    @classmethod
    def make(cls, coords, level: int) -> "TorsionPoint":
        if not 2 <= level <= MAX_LEVEL:
            raise ArgumentError(f"level must be in 2..{MAX_LEVEL}")
        cs = tuple(_mod1(Fraction(c)) for c in coords)
        if len(cs) != 4:
            raise ArgumentError("torsion points have four coordinates")
        for c in cs:
            if level % c.denominator != 0:
                raise LevelError(f"denominator of {c} does not divide level {level}")
        return cls(cs, level)

    @classmethod
    def zero(cls, level: int) -> "TorsionPoint":
        return cls.make((0, 0, 0, 0), level)

    def __add__(self, other: "TorsionPoint") -> "TorsionPoint":
        if self.level != other.level:
            raise LevelError("level mismatch")
        return TorsionPoint(tuple(_mod1(a + b) for a, b in zip(self.coords, other.coords)),
                            self.level)

    def __neg__(self) -> "TorsionPoint":
        return TorsionPoint(tuple(_mod1(-a) for a in self.coords), self.level)

    def __sub__(self, other: "TorsionPoint") -> "TorsionPoint":
        return self + (-other)

    def scale(self, k: int) -> "TorsionPoint":
        return TorsionPoint(tuple(_mod1(k * a) for a in self.coords), self.level)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def order(self) -> int:
        for k in range(1, self.level + 1):
            if self.scale(k).is_zero():
                return k
        raise LevelError("order does not divide the level")  # unreachable

    def to_strings(self):
        return [str(c) for c in self.coords]

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + f")@{self.level}"


def weil_pairing(x: TorsionPoint, y: TorsionPoint) -> Fraction:
    """Value in (1/N)Z/Z; bilinear, alternating, nondegenerate on the full
    level-N torsion."""
    if x.level != y.level:
        raise LevelError("level mismatch")
    a, b = x.coords, y.coords
    raw = a[0] * b[1] - a[1] * b[0] + a[2] * b[3] - a[3] * b[2]
    return _mod1(x.level * raw)


def full_group(level: int):
    """All level-N points of Q^4/Z^4 (N^4 of them), lexicographically ordered."""
    vals = [Fraction(i, level) for i in range(level)]
    return [TorsionPoint(c, level) for c in itertools.product(vals, repeat=4)]


@dataclass(frozen=True)
class TorsionSubgroup:
    generators: tuple
    level: int
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, p: TorsionPoint) -> bool:
        return p in self.elements

    def sorted_elements(self):
        return sorted(self.elements)

    def to_report(self):
        return [p.to_strings() for p in self.sorted_elements()]


def span(gens) -> TorsionSubgroup:
    gens = tuple(gens)
    if not gens:
        raise ArgumentError("span of nothing; pass at least the zero point")
    level = gens[0].level
    if any(g.level != level for g in gens):
        raise LevelError("level mismatch among generators")
    elements = {TorsionPoint.zero(level)}
    frontier = [TorsionPoint.zero(level)]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = p + g
            if q not in elements:
                elements.add(q)
                frontier.append(q)
    return TorsionSubgroup(gens, level, frozenset(elements))


def perp(s: TorsionSubgroup) -> TorsionSubgroup:
    """Symplectic complement inside the full level-N torsion."""
    gens = [g for g in s.generators if not g.is_zero()] or [TorsionPoint.zero(s.level)]
    members = [p for p in full_group(s.level)
               if all(weil_pairing(p, g) == 0 for g in gens)]
    return TorsionSubgroup(tuple(members), s.level, frozenset(members))


def is_isotropic(s: TorsionSubgroup) -> bool:
    gens = list(s.generators)
    return all(weil_pairing(g, h) == 0 for g in gens for h in gens)


@dataclass(frozen=True)
class QuotientSubgroup:
    """A subgroup of a quotient (Q^4/Z^4 at level N) / kernel, held as
    canonical coset representatives (lexicographically least element)."""

    kernel: TorsionSubgroup
    representatives: tuple

    @property
    def order(self) -> int:
        return len(self.representatives)

    def project(self, p: TorsionPoint) -> TorsionPoint:
        return min(p + k for k in self.kernel.elements)

    def contains(self, p: TorsionPoint) -> bool:
        return self.project(p) in set(self.representatives)

    def to_report(self):
        return [p.to_strings() for p in sorted(self.representatives)]


def project_to_quotient(kernel: TorsionSubgroup, points) -> QuotientSubgroup:
    reps = sorted({min(p + k for k in kernel.elements) for p in points})
    return QuotientSubgroup(kernel, tuple(reps))


def ker_phi_H(kernel_mu: TorsionSubgroup) -> QuotientSubgroup:
    """The polarisation kernel of the quotient surface: the image of the
    symplectic complement of ker(mu) in the quotient by ker(mu)."""
    if not is_isotropic(kernel_mu):
        raise NotIsotropic("ker(mu) must be isotropic")
    return project_to_quotient(kernel_mu, perp(kernel_mu).elements)


def factor_intersection(kernel_mu: TorsionSubgroup, quotient_group: QuotientSubgroup,
                        factor: str) -> QuotientSubgroup:
    """Intersection of the image of one elliptic factor with a subgroup of the
    quotient.  factor is "E" (first two coordinates) or "F" (last two)."""
    level = kernel_mu.level
    vals = [Fraction(i, level) for i in range(level)]
    if factor == "E":
        pts = [TorsionPoint((u, v, Fraction(0), Fraction(0)), level)
               for u, v in itertools.product(vals, repeat=2)]
    elif factor == "F":
        pts = [TorsionPoint((Fraction(0), Fraction(0), u, v), level)
               for u, v in itertools.product(vals, repeat=2)]
    else:
        raise ArgumentError("factor must be 'E' or 'F'")
    reps = [quotient_group.project(p) for p in pts]
    hits = sorted({r for r in reps if r in set(quotient_group.representatives)})
    return QuotientSubgroup(kernel_mu, tuple(hits))


# ---------------------------------------------------------------------------
# The duality chain for (1,d)-polarised quotients of E x F
# ---------------------------------------------------------------------------


def duality_chain(d: int) -> dict:
    """Constructs A = (E x F)/<(P, Q)> with P = (1/d, 0, 0, 0),
    Q = (0, 0, 1/d, 0) and verifies, by enumeration at level d:

    * |ker phi_H| = d^2, with both factor intersections equal to the image
      of <P> (resp. <Q>);
    * the quotient of A by the image of P corresponds upstairs to the
      product kernel <(P,0), (0,Q)>;
    * G = ker phi_H / <image of P> is cyclic of order d, generated by the
      image of (P', -Q') = (0, 1/d, 0, -1/d);
    * for d = 2 the generator is 2-torsion with primitive components in
      both factors (the quotient shape is preserved under duality).
    """
    if not 2 <= d <= 8:
        raise ArgumentError("d must be in 2..8")
    P = TorsionPoint.make((Fraction(1, d), 0, 0, 0), d)
    Q = TorsionPoint.make((0, 0, Fraction(1, d), 0), d)
    PQ = P + Q
    ker_mu = span([PQ])
    kphi = ker_phi_H(ker_mu)

    e_cap = factor_intersection(ker_mu, kphi, "E")
    f_cap = factor_intersection(ker_mu, kphi, "F")
    p_image = project_to_quotient(ker_mu, span([P]).elements)
    q_image = project_to_quotient(ker_mu, span([Q]).elements)

    # quotient of A by the image of P, pulled back to E x F
    upstairs = span([PQ, P])
    product_kernel = span([P, Q])

    # G = ker phi_H / <image of P>: work with cosets modulo span([P, PQ])
    big_kernel = span([P, PQ])
    g_group = project_to_quotient(big_kernel, perp(ker_mu).elements)
    p_prime_minus_q_prime = TorsionPoint.make((0, Fraction(1, d), 0, Fraction(-1, d)), d)
    gen_class = g_group.project(p_prime_minus_q_prime)
    cyclic = project_to_quotient(big_kernel,
                                 [p_prime_minus_q_prime.scale(k) for k in range(d)])

    checks = {
        "ker_phi_H_order_is_d_squared": kphi.order == d * d,
        "E_cap_ker_phi_H_is_P": set(e_cap.representatives) == set(p_image.representatives),
        "F_cap_ker_phi_H_is_Q": set(f_cap.representatives) == set(q_image.representatives),
        "A_mod_P_kernel_is_product": upstairs.elements == product_kernel.elements,
        "G_has_order_d": g_group.order == d,
        "G_generated_by_P_prime_minus_Q_prime":
            set(cyclic.representatives) == set(g_group.representatives),
    }
    if d == 2:
        comps = p_prime_minus_q_prime.coords
        checks["dual_back_in_two_torsion_shape"] = (
            gen_class.scale(2).is_zero()
            and comps[1].denominator == 2 and comps[3].denominator == 2
        )
    return {
        "d": d,
        "level": d,
        "ker_mu": ker_mu.to_report(),
        "ker_phi_H": kphi.to_report(),
        "E_cap_ker_phi_H": e_cap.to_report(),
        "F_cap_ker_phi_H": f_cap.to_report(),
        "G": g_group.to_report(),
        "G_generator": gen_class.to_strings(),
        "checks": checks,
        "all_ok": all(checks.values()),
    }


# ---------------------------------------------------------------------------
# The square-lattice worked example: E = C/Z[i], A = (E x E)/<(e1, e2)>
# ---------------------------------------------------------------------------


def _alpha(p2):
    """The order-4 automorphism ((0, -1), (1, 0)) on a 2-coordinate torsion
    element of one factor."""
    u, v = p2
    return (_mod1(-v), _mod1(u))


def example_surj_report() -> dict:
    """Full bookkeeping for the square-lattice surface that a product of two
    copies of y^2 = x^3 + x produces: the order-4 automorphism action on
    2-torsion, the polarisation kernel, and the graph-curve intersections.

    Every quotient of this surface by a half-polarisation-kernel subgroup is
    a polarised product, so the surface carries no smooth genus-3 curve.
    """
    half = Fraction(1, 2)
    e2 = (half, half)
    f2 = (half, Fraction(0))
    ef2 = (_mod1(e2[0] + f2[0]), _mod1(e2[1] + f2[1]))

    alpha_checks = {
        "alpha_fixes_e": _alpha(e2) == e2,
        "alpha_sends_f_to_e_plus_f": _alpha(f2) == ef2,
        "alpha_sends_e_plus_f_to_f": _alpha(ef2) == f2,
    }

    def pt(first, second, level):
        return TorsionPoint.make(first + second, level)

    zero2 = (Fraction(0), Fraction(0))

    # level 2: the polarisation kernel
    kernel2 = span([pt(e2, e2, 2)])
    kphi = ker_phi_H(kernel2)
    expected = project_to_quotient(kernel2, [
        pt(zero2, zero2, 2),
        pt(e2, zero2, 2),
        pt(f2, f2, 2),
        pt(ef2, f2, 2),
    ])
    ker_phi_matches = set(kphi.representatives) == set(expected.representatives)

    # level 4: graph subgroups and their intersections in the quotient
    kernel4 = span([pt(e2, e2, 4)])
    quarter = [Fraction(i, 4) for i in range(4)]
    s_values = [(u, v) for u in quarter for v in quarter]

    def graph_image(transform):
        pts = [pt(s, transform(s), 4) for s in s_values]
        return project_to_quotient(kernel4, pts)

    g_diag = graph_image(lambda s: s)
    g_anti = graph_image(lambda s: (_mod1(-s[0]), _mod1(-s[1])))
    g_alpha = graph_image(_alpha)
    g_malpha = graph_image(lambda s: tuple(_mod1(-c) for c in _alpha(s)))

    def intersect(g1, g2):
        reps = sorted(set(g1.representatives) & set(g2.representatives))
        return QuotientSubgroup(kernel4, tuple(reps))

    diag_cap = intersect(g_diag, g_anti)
    alpha_cap = intersect(g_alpha, g_malpha)
    diag_expected = project_to_quotient(kernel4, [pt(zero2, zero2, 4), pt(f2, f2, 4)])
    alpha_expected = project_to_quotient(kernel4, [pt(zero2, zero2, 4), pt(ef2, f2, 4)])

    # the three order-2 quotients of A: each pulls back to 2-torsion of a
    # graph curve (or of the standard product), so each quotient is a product
    two = [Fraction(0), half]
    e_two_torsion = [(u, v) for u in two for v in two]
    product_two = span([pt(e2, zero2, 2), pt(zero2, e2, 2)])
    diag_two = span([pt(s, s, 2) for s in e_two_torsion if s != zero2])
    alpha_two = span([pt(s, _alpha(s), 2) for s in e_two_torsion if s != zero2])
    quotient_checks = {
        "A_mod_mu_e1_is_standard_product":
            span([pt(e2, e2, 2), pt(e2, zero2, 2)]).elements == product_two.elements,
        "A_mod_mu_f1_f2_is_diagonal_product":
            span([pt(e2, e2, 2), pt(f2, f2, 2)]).elements == diag_two.elements,
        "A_mod_mu_e1f1_f2_is_alpha_graph_product":
            span([pt(e2, e2, 2), pt(ef2, f2, 2)]).elements == alpha_two.elements,
    }

    checks = dict(alpha_checks)
    checks["ker_phi_A_matches_expected_list"] = ker_phi_matches
    checks["diagonal_intersection_matches"] = (
        set(diag_cap.representatives) == set(diag_expected.representatives))
    checks["alpha_intersection_matches"] = (
        set(alpha_cap.representatives) == set(alpha_expected.representatives))
    checks.update(quotient_checks)
    return {
        "curve": "y^2 = x^3 + x (square lattice, order-4 automorphism)",
        "ker_phi_A": kphi.to_report(),
        "mu_E_diag_cap_mu_E_antidiag": diag_cap.to_report(),
        "mu_E_alpha_cap_mu_E_minus_alpha": alpha_cap.to_report(),
        "checks": checks,
        "all_ok": all(checks.values()),
    }
