"""Short Weierstrass arithmetic over Q, Velu quotients by rational cyclic
kernels of order <= 12, and the dual-non-isomorphism certificate for
(1,d)-polarised quotients of a product of elliptic curves.

Isomorphism over an algebraically closed field is decided by j-invariant
equality.  Non-isogeny of the two factors is never certified here: it is an
input assertion, with j(E) != j(F) reported as weak evidence only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgumentError, OrderError, PointError, SingularError
from .algebra import format_rational
from .family import HyperellipticModel, short_weierstrass_coefficients

MAX_KERNEL_ORDER = 12


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + p x + q, nonsingular."""

    p: Fraction
    q: Fraction

    @classmethod
    def make(cls, p, q) -> "WeierstrassCurve":
        p = Fraction(p)
        q = Fraction(q)
        if 4 * p ** 3 + 27 * q * q == 0:
            raise SingularError("4p^3 + 27q^2 = 0")
        return cls(p, q)

    @classmethod
    def from_string(cls, text: str) -> "WeierstrassCurve":
        parts = text.split(",")
        if len(parts) != 2:
            raise ArgumentError(f"curve format is 'p,q', got {text!r}")
        return cls.make(Fraction(parts[0]), Fraction(parts[1]))

    def contains(self, x: Fraction, y: Fraction) -> bool:
        return y * y == x ** 3 + self.p * x + self.q

    def to_string(self) -> str:
        return f"{format_rational(self.p)},{format_rational(self.q)}"


def j_weierstrass(curve: WeierstrassCurve) -> Fraction:
    delta = 4 * curve.p ** 3 + 27 * curve.q ** 2
    if delta == 0:
        raise SingularError("singular curve has no j-invariant")
    return 1728 * 4 * curve.p ** 3 / delta


def quartic_to_weierstrass(model: HyperellipticModel) -> WeierstrassCurve:
    """A short Weierstrass curve with the same j-invariant as the genus-1
    model (binary-quartic invariants for quartics, depression for cubics)."""
    p, q = short_weierstrass_coefficients(model)
    return WeierstrassCurve.make(p, q)


# Affine points are (x, y) pairs; None is the point at infinity.


def add_points(curve: WeierstrassCurve, P, Q):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 + y2 == 0:
            return None
        lam = (3 * x1 * x1 + curve.p) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    y3 = lam * (x1 - x3) - y1
    return (x3, y3)


def scalar_multiple(curve: WeierstrassCurve, k: int, P):
    acc = None
    add = P
    while k:
        if k & 1:
            acc = add_points(curve, acc, add)
        add = add_points(curve, add, add)
        k >>= 1
    return acc


def point_order(curve: WeierstrassCurve, P, bound: int = MAX_KERNEL_ORDER) -> int:
    acc = P
    for k in range(1, bound + 1):
        if acc is None:
            return k
        acc = add_points(curve, acc, P)
    raise OrderError(f"point order exceeds {bound}")


@dataclass(frozen=True)
class KernelPoint:
    """A rational point of known finite order on a carrying curve."""

    x: Fraction
    y: Fraction
    order: int

    @classmethod
    def on_curve(cls, curve: WeierstrassCurve, x, y, order=None) -> "KernelPoint":
        x = Fraction(x)
        y = Fraction(y)
        if not curve.contains(x, y):
            raise PointError(f"({x}, {y}) is not on y^2 = x^3 + {curve.p} x + {curve.q}")
        true_order = point_order(curve, (x, y))
        if order is not None and order != true_order:
            raise OrderError(f"claimed order {order}, actual order {true_order}")
        return cls(x, y, true_order)

    @classmethod
    def from_string(cls, curve: WeierstrassCurve, text: str) -> "KernelPoint":
        parts = text.split(",")
        if len(parts) != 2:
            raise ArgumentError(f"point format is 'x,y', got {text!r}")
        return cls.on_curve(curve, Fraction(parts[0]), Fraction(parts[1]))


def velu_quotient(curve: WeierstrassCurve, P: KernelPoint) -> WeierstrassCurve:
    """The image curve of the degree-n isogeny with kernel <P>, in short
    Weierstrass form."""
    if P.order == 1:
        return curve
    if P.order > MAX_KERNEL_ORDER:
        raise OrderError(f"kernel order {P.order} exceeds {MAX_KERNEL_ORDER}")
    pt = (P.x, P.y)
    if not curve.contains(P.x, P.y):
        raise PointError("kernel point is not on the curve")

    # one representative of each {T, -T}, all 2-torsion elements included
    kernel = []
    acc = pt
    while acc is not None:
        kernel.append(acc)
        acc = add_points(curve, acc, pt)
    reps = []
    seen = set()
    for (x, y) in kernel:
        if (x, y) in seen:
            continue
        seen.add((x, y))
        seen.add((x, -y))
        reps.append((x, y))

    v = Fraction(0)
    w = Fraction(0)
    for (x, y) in reps:
        gx = 3 * x * x + curve.p
        gy = -2 * y
        vq = gx if y == 0 else 2 * gx
        uq = gy * gy
        v += vq
        w += uq + x * vq
    return WeierstrassCurve.make(curve.p - 5 * v, curve.q - 7 * w)


def dual_nonisomorphism_check(E: WeierstrassCurve, P: KernelPoint,
                              F: WeierstrassCurve, Q: KernelPoint,
                              nonisogenous_asserted: bool) -> dict:
    """Certificate that (E x F)/<(P, Q)> is not abstractly isomorphic to its
    dual: the premise is j(E/P) != j(E) or j(F/Q) != j(F), and the
    non-isogeny hypothesis is taken on the caller's word."""
    if P.order != Q.order:
        raise OrderError(f"kernel orders differ: {P.order} != {Q.order}")
    if P.order < 2:
        raise OrderError("kernel points must have order >= 2")
    jE = j_weierstrass(E)
    jF = j_weierstrass(F)
    jEP = j_weierstrass(velu_quotient(E, P))
    jFQ = j_weierstrass(velu_quotient(F, Q))
    premise = (jEP != jE) or (jFQ != jF)
    if not nonisogenous_asserted:
        conclusion = "hypothesis unverified: non-isogeny not asserted"
    elif premise:
        conclusion = "A is not isomorphic to its dual"
    else:
        conclusion = "no conclusion: both quotients preserve j"
    return {
        "d": P.order,
        "j_E": format_rational(jE),
        "j_E_mod_P": format_rational(jEP),
        "j_F": format_rational(jF),
        "j_F_mod_Q": format_rational(jFQ),
        "premise_holds": premise,
        "nonisogenous_evidence": {
            "j_values_differ": jE != jF,
            "asserted_by_caller": nonisogenous_asserted,
        },
        "conclusion": conclusion,
    }
