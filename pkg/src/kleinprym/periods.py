"""High-precision analytic layer: elliptic periods through the optimal
complex AGM, the modular j-value from the q-expansion, the explicit 2x4
Prym period matrix with polarisation type (1,2), and Riemann-relation checks.

Strategy for periods of a genus-1 model y^2 = f(x), deg f in {3, 4}:

* a quartic is converted to a cubic with the *same* period lattice by
  x = r + 1/u, w = y u^2 for a root r of f (dx/y = -du/w);
* the cubic c (u - e1)(u - e2)(u - e3) is sent to the three-root normal
  form s (s - 1)(s - lambda) by u = e1 + (e2 - e1) s, which scales the
  lattice by (c (e2 - e1))^(-1/2);
* the normal form has lattice basis (2 K(lambda), 2 i K(1 - lambda)) with
  K(m) = pi / (2 M(1, sqrt(1 - m))) computed by the optimal AGM; the root
  ordering is chosen so that lambda stays away from the two real cuts
  (-inf, 0] and [1, +inf), where that basis is the analytic continuation
  of the real-root case and hence remains a genuine lattice basis.

All tolerances are powers of two relative to the requested precision.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import mpmath

from .errors import ArgumentError, DomainError, PrecisionError
from .algebra import ComplexApprox, DEFAULT_PRECISION_BITS, tolerance
from .family import HyperellipticModel

_GUARD_BITS = 64


def _cap(z, bits) -> ComplexApprox:
    z = mpmath.mpc(z)
    return ComplexApprox(z.real, z.imag, bits)


def _as_mpc(z) -> mpmath.mpc:
    if isinstance(z, ComplexApprox):
        return z.to_mpc()
    return mpmath.mpc(z)


def optimal_agm(a, b, precision_bits: int) -> mpmath.mpc:
    """Arithmetic-geometric mean with the optimal square-root branch:
    at each step pick the root with |a1 - b1| <= |a1 + b1| (ties broken by
    Im(b1/a1) > 0)."""
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        a = mpmath.mpc(a)
        b = mpmath.mpc(b)
        eps = mpmath.ldexp(1, -precision_bits - _GUARD_BITS // 2)
        for _ in range(8 * precision_bits):
            if mpmath.fabs(a - b) <= eps * mpmath.fabs(a):
                return (a + b) / 2
            a1 = (a + b) / 2
            b1 = mpmath.sqrt(a * b)
            if mpmath.fabs(a1 - b1) > mpmath.fabs(a1 + b1):
                b1 = -b1
            elif mpmath.fabs(a1 - b1) == mpmath.fabs(a1 + b1) and mpmath.im(b1 / a1) < 0:
                b1 = -b1
            a, b = a1, b1
        raise PrecisionError("AGM did not converge within the iteration budget")


def _complete_K(m, precision_bits: int) -> mpmath.mpc:
    """K(m) = pi / (2 M(1, sqrt(1 - m))), principal square root."""
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        return mpmath.pi / (2 * optimal_agm(1, mpmath.sqrt(1 - mpmath.mpc(m)),
                                            precision_bits))


@dataclass(frozen=True)
class PeriodPair:
    """A lattice basis (omega1, omega2) with tau = omega2/omega1 in the
    upper half-plane."""

    omega1: ComplexApprox
    omega2: ComplexApprox
    tau: ComplexApprox

    def lattice_coordinates(self, z):
        """Real coordinates of z in the basis (omega1, omega2)."""
        w1 = self.omega1.to_mpc()
        w2 = self.omega2.to_mpc()
        z = _as_mpc(z)
        det = w1.real * w2.imag - w1.imag * w2.real
        s = (z.real * w2.imag - z.imag * w2.real) / det
        t = (w1.real * z.imag - w1.imag * z.real) / det
        return s, t


def _roots_of(rhs, precision_bits: int):
    coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(rhs.coeffs)]
    roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=precision_bits)
    return [mpmath.mpc(r) for r in roots]


def _cut_distance(lam: complex) -> float:
    """Distance of lambda from the union of the rays (-inf, 0] and [1, +inf)."""
    x, y = lam.real, lam.imag
    d1 = abs(y) if x <= 0 else abs(lam)
    d2 = abs(y) if x >= 1 else abs(lam - 1)
    return min(d1, d2)


def elliptic_periods_agm(model: HyperellipticModel,
                         precision_bits: int = DEFAULT_PRECISION_BITS) -> PeriodPair:
    """A period lattice basis of y^2 = f(x) computed by the optimal AGM,
    normalised so that tau has positive imaginary part.  Deterministic for
    fixed precision."""
    if model.genus != 1:
        raise ArgumentError("periods are computed for genus-1 models only")
    rhs = model.rhs
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        roots = _roots_of(rhs, precision_bits)
        # all selection logic runs in float64 so the chosen ordering is
        # identical at every working precision
        roots.sort(key=lambda r: (float(r.real), float(r.imag)))
        lead = mpmath.mpf(rhs.leading.numerator) / rhs.leading.denominator

        if rhs.degree == 4:
            # x = r + 1/u turns the quartic into a cubic with the same lattice
            approx = [complex(r) for r in roots]

            def separation(i):
                return min(abs(approx[i] - approx[j]) for j in range(4) if j != i)

            sel = max(range(4), key=separation)
            r = roots[sel]
            others = [roots[j] for j in range(4) if j != sel]
            cubic_roots = [1 / (rj - r) for rj in others]
            cubic_lead = lead
            for rj in others:
                cubic_lead *= (r - rj)
            cubic_roots.sort(key=lambda e: (float(e.real), float(e.imag)))
        else:
            cubic_roots = roots
            cubic_lead = lead

        approx3 = [complex(e) for e in cubic_roots]
        best = None
        for perm in itertools.permutations(range(3)):
            e1a, e2a, e3a = (approx3[i] for i in perm)
            score = _cut_distance((e3a - e1a) / (e2a - e1a))
            if best is None or score > best[0]:
                best = (score, perm)
        score, perm = best
        e1, e2, e3 = (cubic_roots[i] for i in perm)
        lam = (e3 - e1) / (e2 - e1)
        if score < mpmath.ldexp(1, -precision_bits // 2):
            raise PrecisionError("branch-point cross-ratio too close to the cuts")

        scale = 1 / mpmath.sqrt(cubic_lead * (e2 - e1))
        K = _complete_K(lam, precision_bits)
        Kprime = _complete_K(1 - lam, precision_bits)
        omega1 = scale * 2 * K
        omega2 = scale * 2 * mpmath.mpc(0, 1) * Kprime
        tau = omega2 / omega1
        if tau.imag < 0:  # defensive; the cut-plane construction keeps Im > 0
            omega2 = -omega2
            tau = -tau
        return PeriodPair(_cap(omega1, precision_bits),
                          _cap(omega2, precision_bits),
                          _cap(tau, precision_bits))


# ---------------------------------------------------------------------------
# The modular j-value
# ---------------------------------------------------------------------------


def _reduce_to_fundamental_domain(tau):
    for _ in range(10_000):
        tau = tau - mpmath.floor(tau.real + mpmath.mpf(1) / 2)
        if mpmath.fabs(tau) < 1:
            tau = -1 / tau
        else:
            return tau
    raise PrecisionError("fundamental-domain reduction did not terminate")


def analytic_j(tau, precision_bits: int = DEFAULT_PRECISION_BITS) -> ComplexApprox:
    """j(tau) from the Eisenstein q-expansions, terms added until the tail
    drops below 2^(-precision_bits)."""
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        tau = _as_mpc(tau)
        if tau.imag <= 0:
            raise DomainError("tau must lie in the upper half-plane")
        tau = _reduce_to_fundamental_domain(tau)
        q = mpmath.exp(2 * mpmath.pi * mpmath.mpc(0, 1) * tau)
        e4 = mpmath.mpc(1)
        e6 = mpmath.mpc(1)
        qn = mpmath.mpc(1)
        cutoff = mpmath.ldexp(1, -precision_bits - 16)
        for n in range(1, 64 * precision_bits):
            qn *= q
            term = qn / (1 - qn)
            e4 += 240 * n ** 3 * term
            e6 -= 504 * n ** 5 * term
            if n ** 5 * mpmath.fabs(qn) < cutoff:
                break
        else:
            raise PrecisionError("q-expansion did not reach the tail bound")
        e4_cubed = e4 ** 3
        j = 1728 * e4_cubed / (e4_cubed - e6 ** 2)
        return _cap(j, precision_bits)


# ---------------------------------------------------------------------------
# Prym period matrix, polarisation type (1, 2)
# ---------------------------------------------------------------------------

POLARIZATION_TYPE = (1, 2)


@dataclass(frozen=True)
class PrymPeriodMatrix:
    """2x4 matrix ((z1, z1, 1, 0), (z1, z1 + z2, 0, 2)) with the alternating
    form ((0, D), (-D, 0)), D = diag(1, 2)."""

    entries: tuple  # 2x4 of ComplexApprox
    polarization: tuple = POLARIZATION_TYPE

    @property
    def precision_bits(self) -> int:
        return max(e.precision_bits for row in self.entries for e in row)

    def to_mpc_rows(self):
        return [[e.to_mpc() for e in row] for row in self.entries]

    def to_report(self) -> dict:
        def cell(e):
            return {"re": mpmath.nstr(e.real, 17), "im": mpmath.nstr(e.imag, 17)}

        return {
            "entries": [[cell(e) for e in row] for row in self.entries],
            "polarization": list(self.polarization),
            "precision_bits": self.precision_bits,
        }


def _require_upper(z, name):
    if _as_mpc(z).imag <= 0:
        raise DomainError(f"{name} must lie in the upper half-plane")


def prym_period_matrix(z1, z2) -> PrymPeriodMatrix:
    _require_upper(z1, "z1")
    _require_upper(z2, "z2")
    bits = max(getattr(z1, "precision_bits", DEFAULT_PRECISION_BITS),
               getattr(z2, "precision_bits", DEFAULT_PRECISION_BITS))
    w1 = _as_mpc(z1)
    w2 = _as_mpc(z2)
    rows = (
        (w1, w1, mpmath.mpc(1), mpmath.mpc(0)),
        (w1, w1 + w2, mpmath.mpc(0), mpmath.mpc(2)),
    )
    return PrymPeriodMatrix(tuple(tuple(_cap(e, bits) for e in row) for row in rows))


@dataclass(frozen=True)
class ReductionTrace:
    """Intermediate matrices of the product-to-Prym reduction.

    Starting from the (2,2)-polarised product matrix with columns
    (f1, f2, e1, e2), the basis change f2' = f1 + f2, e1' = e1 - e2
    (symplectic for the (2,2) form), the quotient by e1'/2, and a final
    coordinate shear produce the (1,2) Prym matrix.
    """

    product_matrix: tuple
    basis_changed: tuple
    after_quotient: tuple     # the documented intermediate matrix
    final: tuple
    basis_change: tuple       # 4x4 integer matrix on lattice columns
    basis_change_symplectic: bool


def _sym_form_22():
    z = [0] * 4
    m = [list(z) for _ in range(4)]
    m[0][2] = 2
    m[1][3] = 2
    m[2][0] = -2
    m[3][1] = -2
    return m


def product_to_prym_reduction(z1, z2) -> ReductionTrace:
    _require_upper(z1, "z1")
    _require_upper(z2, "z2")
    bits = max(getattr(z1, "precision_bits", DEFAULT_PRECISION_BITS),
               getattr(z2, "precision_bits", DEFAULT_PRECISION_BITS))
    with mpmath.workprec(bits + _GUARD_BITS):
        w1 = _as_mpc(z1)
        w2 = _as_mpc(z2)
        zero = mpmath.mpc(0)
        one = mpmath.mpc(1)
        two = mpmath.mpc(2)

        product = ((w1, zero, two, zero), (zero, w2, zero, two))

        # columns: f1' = f1, f2' = f1 + f2, e1' = e1 - e2, e2' = e2
        S = ((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, -1, 1))
        basis_changed = tuple(
            tuple(sum(product[r][k] * S[k][c] for k in range(4)) for c in range(4))
            for r in range(2)
        )
        # quotient by e1'/2 halves the third lattice column
        after_quotient = tuple(
            (row[0], row[1], row[2] / 2, row[3]) for row in basis_changed
        )
        # coordinate shear ((1, 0), (1, 1)) on C^2
        final = (
            after_quotient[0],
            tuple(after_quotient[0][c] + after_quotient[1][c] for c in range(4)),
        )

        J = _sym_form_22()
        StJS = [[sum(S[k][i] * sum(J[k][l] * S[l][j] for l in range(4))
                     for k in range(4)) for j in range(4)] for i in range(4)]
        symplectic = StJS == J

        def freeze(rows):
            return tuple(tuple(_cap(e, bits) for e in row) for row in rows)

        return ReductionTrace(
            product_matrix=freeze(product),
            basis_changed=freeze(basis_changed),
            after_quotient=freeze(after_quotient),
            final=freeze(final),
            basis_change=S,
            basis_change_symplectic=symplectic,
        )


def riemann_check(matrix: PrymPeriodMatrix):
    """(residual_symmetry, min_eigenvalue) of the two Riemann relations for
    the alternating form ((0, D), (-D, 0)), D = diag(1, 2):
    Pi E^-1 Pi^T = 0 and i Pi E^-1 Pi^* > 0."""
    bits = matrix.precision_bits
    with mpmath.workprec(bits + _GUARD_BITS):
        rows = matrix.to_mpc_rows()
        d = matrix.polarization
        dinv = [mpmath.mpf(1) / d[0], mpmath.mpf(1) / d[1]]
        # E^-1 = ((0, -D^-1), (D^-1, 0)) for E = ((0, D), (-D, 0))
        einv = [[0, 0, -dinv[0], 0],
                [0, 0, 0, -dinv[1]],
                [dinv[0], 0, 0, 0],
                [0, dinv[1], 0, 0]]

        def quad(conjugate_second):
            out = [[mpmath.mpc(0)] * 2 for _ in range(2)]
            for i in range(2):
                for j in range(2):
                    acc = mpmath.mpc(0)
                    for k in range(4):
                        for l in range(4):
                            if einv[k][l] == 0:
                                continue
                            right = rows[j][l]
                            if conjugate_second:
                                right = mpmath.conj(right)
                            acc += rows[i][k] * einv[k][l] * right
                    out[i][j] = acc
            return out

        sym = quad(conjugate_second=False)
        residual = max(mpmath.fabs(sym[i][j]) for i in range(2) for j in range(2))

        herm = quad(conjugate_second=True)
        h = [[mpmath.mpc(0, 1) * herm[i][j] for j in range(2)] for i in range(2)]
        # 2x2 Hermitian closed-form eigenvalues
        tr = (h[0][0] + h[1][1]).real
        det = (h[0][0] * h[1][1] - h[0][1] * h[1][0]).real
        disc = mpmath.sqrt(max((tr / 2) ** 2 - det, mpmath.mpf(0)))
        min_eig = tr / 2 - disc
        return residual, min_eig


def periods_report(params, precision_bits: int = DEFAULT_PRECISION_BITS) -> dict:
    """Periods of the complementary pair of elliptic quotients, the Prym
    matrix they span, Riemann residuals, and analytic-vs-exact j deltas for
    all six elliptic quotients."""
    from .family import ELLIPTIC_LABELS, CurveLabel, curve_equation, j_invariant

    def cell(e):
        return {"re": mpmath.nstr(e.real, 17), "im": mpmath.nstr(e.imag, 17)}

    tol = tolerance(precision_bits // 4)
    deltas = {}
    taus = {}
    pairs = {}
    for label in ELLIPTIC_LABELS:
        model = curve_equation(label, params)
        pair = elliptic_periods_agm(model, precision_bits)
        taus[label.value] = pair.tau
        pairs[label.value] = {"omega1": cell(pair.omega1), "omega2": cell(pair.omega2),
                              "tau": cell(pair.tau)}
        exact = j_invariant(model)
        approx = analytic_j(pair.tau, precision_bits)
        with mpmath.workprec(precision_bits):
            exact_c = mpmath.mpf(exact.numerator) / exact.denominator
            deltas[label.value] = float(mpmath.fabs(approx.to_mpc() - exact_c))

    z1 = taus[CurveLabel.E_t.value]
    z2 = taus[CurveLabel.E_st.value]
    matrix = prym_period_matrix(z1, z2)
    residual, min_eig = riemann_check(matrix)
    trace = product_to_prym_reduction(z1, z2)
    return {
        "precision_bits": precision_bits,
        "periods": {k: pairs[k] for k in sorted(pairs)},
        "analytic_vs_exact_j": {k: v for k, v in sorted(deltas.items())},
        "j_delta_tolerance": tol,
        "prym_period_matrix": matrix.to_report(),
        "riemann_residual_symmetry": float(residual),
        "riemann_min_eigenvalue": float(min_eig),
        "reduction_symplectic": trace.basis_change_symplectic,
    }
