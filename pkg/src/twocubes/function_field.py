"""The curve X^3 + Y^3 = k(T) over Q(T) and its L-function over F_p(T).

k(T) = 63(3T^2 - 3T + 1)(T^2 + T + 1)(T^2 - 3T + 3) carries two polynomial
sections.  Mapping a section P to the pullback of the invariant
differential through (T, S) -> (x(T)/S, y(T)/S) on the cyclic cover
S^3 = k(T) collapses, after reduction by S^3 = k and x^3 + y^3 = k, to the
Wronskian x'y - xy' on the basis form dT/S^2; linear independence of the
resulting vectors bounds the rank from below.  The upper bound comes from
the degree-8 L-polynomial of the reduction mod p, assembled from fiber
trace sums c_n and the functional-equation closure of its inverse roots
under g -> p^2/g, then re-verified against independently counted c_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .elliptic import INFINITY, Point, WeierstrassCurve, add_points, scalar_mul
from .exact import (
    OMEGA,
    Eisenstein,
    FiniteField,
    Polynomial,
    RationalFunction,
    ZechLog,
    cyclotomic,
    poly_discriminant,
    poly_gcd,
    rational_poly,
)

MAX_COUNTING_FIELD = 300_000_000  # table-memory guard for the c_n sweeps


class FamilyError(Exception):
    pass


@dataclass(frozen=True)
class SectionPoint:
    """A point of X^3 + Y^3 = k with rational-function coordinates."""

    x: RationalFunction
    y: RationalFunction

    def on_curve(self, k: Polynomial) -> bool:
        return self.x**3 + self.y**3 == RationalFunction(k)


@dataclass(frozen=True)
class HolDifferential:
    """w(T) * dT/S^2 on the genus-4 cover S^3 = k(T)."""

    w: RationalFunction

    def as_polynomial(self) -> Polynomial:
        return self.w.as_polynomial()

    def __add__(self, other: "HolDifferential") -> "HolDifferential":
        return HolDifferential(self.w + other.w)

    def __eq__(self, other):
        return isinstance(other, HolDifferential) and self.w == other.w

    def __hash__(self):
        return hash(self.w)


@dataclass(frozen=True)
class FunctionFieldCurve:
    """X^3 + Y^3 = k(T) with deg k = 6 squarefree, plus its Weierstrass model."""

    k: Polynomial
    k_quadratics: tuple[tuple[int, int, int], ...]  # (a, b, c) per quadratic factor
    k_unit: int
    p1: SectionPoint
    p2: SectionPoint

    @property
    def weierstrass_A(self) -> Polynomial:
        return -432 * self.k * self.k


def build_family() -> FunctionFieldCurve:
    """Construct k(T) = 63(3T^2-3T+1)(T^2+T+1)(T^2-3T+3) and both sections.

    Both on-curve identities are verified as exact polynomial identities;
    a transcription slip fails loudly here.
    """
    quads = ((3, -3, 1), (1, 1, 1), (1, -3, 3))
    k = rational_poly(63)
    for (a, b, c) in quads:
        k = k * rational_poly(c, b, a)
    if k.degree != 6 or poly_discriminant(k) == 0:
        raise FamilyError("twist polynomial is not squarefree of degree 6")
    p1 = SectionPoint(
        RationalFunction(rational_poly(4, -4, 6)), RationalFunction(rational_poly(5, -5, -3))
    )
    p2 = SectionPoint(
        RationalFunction(rational_poly(6, -4, 4)), RationalFunction(rational_poly(-3, -5, 5))
    )
    for name, sec in (("P1", p1), ("P2", p2)):
        if not sec.on_curve(k):
            raise FamilyError(f"section {name} is not on the curve")
    return FunctionFieldCurve(k, quads, 63, p1, p2)


def pullback_differential(P: SectionPoint) -> HolDifferential:
    """lambda(P) = (x'y - xy') dT/S^2.

    Pulling the invariant differential back through (x/S, y/S) and reducing
    with S^3 = k, x^3 + y^3 = k leaves exactly the Wronskian coefficient;
    for quadratic polynomial sections its degree is <= 2 (holomorphy).
    """
    return HolDifferential(P.x.derivative() * P.y - P.x * P.y.derivative())


def cm_twist(P: SectionPoint) -> SectionPoint:
    """(x, y) -> (omega x, omega y), the extra endomorphism over Q(omega)."""
    return SectionPoint(_to_eisenstein_rf(P.x) * OMEGA, _to_eisenstein_rf(P.y) * OMEGA)


def _to_eisenstein_poly(f: Polynomial) -> Polynomial:
    return Polynomial(tuple(c if isinstance(c, Eisenstein) else Eisenstein(c) for c in f.coeffs))


def _to_eisenstein_rf(f: RationalFunction) -> RationalFunction:
    return RationalFunction(_to_eisenstein_poly(f.num), _to_eisenstein_poly(f.den))


def _uses_eisenstein(w: RationalFunction) -> bool:
    return any(
        isinstance(c, Eisenstein) for c in (*w.num.coeffs, *w.den.coeffs)
    )


def z_rank(diffs: list[HolDifferential]) -> int:
    """Rank over Q of the span of the differentials' coefficient vectors.

    Q(omega) coefficients are flattened to pairs of rationals, so the result
    equals the rank of the generated Z-module.
    """
    if not diffs:
        return 0
    ws = [d.w for d in diffs]
    if any(_uses_eisenstein(w) for w in ws):
        ws = [w if _uses_eisenstein(w) else _to_eisenstein_rf(w) for w in ws]
    den = ws[0].den
    for w in ws[1:]:
        g = poly_gcd(den, w.den)
        den = den * (w.den // g)
    numerators = [(w * RationalFunction(den)).as_polynomial() for w in ws]
    width = max((n.degree + 1 if not n.is_zero() else 1) for n in numerators)
    rows = []
    for n in numerators:
        row: list[Fraction] = []
        for i in range(width):
            c = n.coeff(i)
            if isinstance(c, Eisenstein):
                row.extend((c.a, c.b))
            else:
                row.extend((Fraction(c), Fraction(0)))
        rows.append(row)
    return _rank(rows)


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c] / inv
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        r += 1
        rank += 1
        if r == len(rows):
            break
    return rank


# -- group law on sections, through the Weierstrass model ----------------------


def section_to_weierstrass(curve: FunctionFieldCurve, P: SectionPoint) -> Point:
    k = RationalFunction(curve.k)
    s = P.x + P.y
    if s == 0:
        return INFINITY
    return Point(12 * k / s, 36 * k * (P.x - P.y) / s)


def weierstrass_to_section(curve: FunctionFieldCurve, W: Point) -> SectionPoint | None:
    if W.at_infinity:
        return None
    k = RationalFunction(curve.k)
    return SectionPoint((36 * k + W.y) / (6 * W.x), (36 * k - W.y) / (6 * W.x))


def _weierstrass_over_qt(curve: FunctionFieldCurve, eisenstein: bool = False) -> WeierstrassCurve:
    A = RationalFunction(-432 * curve.k * curve.k)
    if eisenstein:
        A = _to_eisenstein_rf(A)
    return WeierstrassCurve(A)


def section_add(
    curve: FunctionFieldCurve, P: SectionPoint | None, Q: SectionPoint | None
) -> SectionPoint | None:
    """P + Q in the Mordell-Weil group; None is the identity."""
    eis = any(_uses_eisenstein(s.x) for s in (P, Q) if s is not None)
    w_curve = _weierstrass_over_qt(curve, eis)
    wp = INFINITY if P is None else section_to_weierstrass(curve, P)
    wq = INFINITY if Q is None else section_to_weierstrass(curve, Q)
    return weierstrass_to_section(curve, add_points(w_curve, wp, wq))


def section_mul(curve: FunctionFieldCurve, n: int, P: SectionPoint) -> SectionPoint | None:
    w_curve = _weierstrass_over_qt(curve)
    W = scalar_mul(w_curve, n, section_to_weierstrass(curve, P))
    return weierstrass_to_section(curve, W)


@dataclass
class LambdaReport:
    additive: bool
    w_left: RationalFunction
    w_right: RationalFunction
    degenerate: bool = False

    def to_json(self) -> dict:
        return {
            "additive": self.additive,
            "lambda_of_sum": self.w_left.format(),
            "sum_of_lambdas": self.w_right.format(),
            "degenerate": self.degenerate,
        }


def lambda_homomorphism_check(
    curve: FunctionFieldCurve, P: SectionPoint, Q: SectionPoint
) -> LambdaReport:
    """Verify lambda(P + Q) = lambda(P) + lambda(Q) exactly.

    The sum is computed by chord-tangent in the Weierstrass model over Q(T)
    and mapped back.  A sum at the identity is the degenerate case
    lambda(O) = 0.
    """
    if P.x + P.y == 0 or Q.x + Q.y == 0:
        raise ValueError("sections at the flex are not supported here")
    w_sum = pullback_differential(P).w + pullback_differential(Q).w
    S = section_add(curve, P, Q)
    if S is None:
        return LambdaReport(w_sum == 0, RationalFunction(Polynomial()), w_sum, degenerate=True)
    w_left = pullback_differential(S).w
    return LambdaReport(w_left == w_sum, w_left, w_sum)


# -- the L-function over F_p(T) -------------------------------------------------


class LFunctionError(Exception):
    pass


@dataclass(frozen=True)
class LPolynomial:
    """L(u) = sum coeffs[i] u^i of degree 8, with the c_n actually counted."""

    p: int
    coeffs: tuple[int, ...]
    counted: tuple[tuple[int, int], ...]  # (n, c_n) pairs that were counted

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def power_sum_coefficients(self, upto: int) -> list[int]:
        """c_1..c_upto from log L; inverse of the exp construction."""
        b = [Fraction(c) for c in self.coeffs] + [Fraction(0)] * max(
            0, upto + 1 - len(self.coeffs)
        )
        cs: list[Fraction] = []
        for n in range(1, upto + 1):
            acc = n * b[n]
            for j in range(1, n):
                acc -= cs[j - 1] * b[n - j]
            cs.append(acc)
        assert all(c.denominator == 1 for c in cs)
        return [int(c) for c in cs]

    def as_poly(self) -> Polynomial:
        return rational_poly(*self.coeffs)

    def functional_equation_sign(self) -> int:
        b = self.coeffs
        p = self.p
        for sign in (1, -1):
            if all(b[8 - i] == sign * p ** (8 - 2 * i) * b[i] for i in range(0, 4 + 1)):
                return sign
        raise LFunctionError("no functional-equation sign fits")


def _exp_series(cn: dict[int, int], upto: int) -> list[Fraction]:
    """b_0..b_upto with n b_n = sum_{j<=n} c_j b_{n-j}."""
    b = [Fraction(1)]
    for n in range(1, upto + 1):
        acc = Fraction(0)
        for j in range(1, n + 1):
            acc += cn.get(j, 0) * b[n - j]
        b.append(acc / n)
    return b


@lru_cache(maxsize=8)
def _engine(p: int, n: int) -> ZechLog:
    return ZechLog(FiniteField(p, n))


def good_prime(curve: FunctionFieldCurve, p: int) -> bool:
    from .exact import is_probable_prime

    if not is_probable_prime(p) or p in (2, 3):
        return False
    if curve.k.lc.numerator % p == 0:
        return False
    disc = poly_discriminant(curve.k)
    if disc.denominator % p == 0:
        raise LFunctionError("discriminant has p in its denominator")
    return disc.numerator % p != 0


def fiber_trace_sum(curve: FunctionFieldCurve, p: int, n: int) -> int:
    """c_n = sum of fiber traces over P^1(F_{p^n}); additive fibers give 0.

    Over fields with q = 2 mod 3 cubing is a bijection, every good fiber is
    supersingular, and the sum is 0 without any counting.  Otherwise the
    sextic trace table (six counts) plus one cubic-class sweep of k(t) in
    log coordinates covers all of F_q, the t = 0 fiber is patched in
    directly, and the fiber at infinity comes from the reversed model
    (v^2 = u^3 - 432 lc(k)^2, good reduction here).
    """
    q = p**n
    if q % 3 == 2:
        return 0
    if q > MAX_COUNTING_FIELD:
        raise LFunctionError(f"counting over q = {p}^{n} exceeds the table budget")
    engine = _engine(p, n)
    field = engine.field
    traces = _engine_traces(p, n)
    roots = []
    for (a, b, c) in curve.k_quadratics:
        disc = field((b * b - 4 * a * c) % p)
        s = engine.sqrt(disc)
        inv2a = field(2 * a).inverse()
        mb = field(-b % p)
        roots.append((mb + s) * inv2a)
        roots.append((mb - s) * inv2a)
    lc = curve.k_unit
    for (a, _, _) in curve.k_quadratics:
        lc *= a
    unit = field(lc % p)
    counts, n_bad = engine.cube_class_counts(unit, roots)
    if n_bad != len(roots):
        raise LFunctionError("repeated roots of k in the counting field")
    k0 = field(int(curve.k.coeff(0)) % p)
    if not k0.is_zero():
        counts[engine.log(k0) % 3] += 1
    l432 = engine.log(field(-432 % p))
    c_n = 0
    for j in range(3):
        c_n += counts[j] * traces[(l432 + 2 * j) % 6]
    a_inf = field(-432 % p) * unit * unit
    c_n += traces[engine.log(a_inf) % 6]
    return c_n


@lru_cache(maxsize=16)
def _engine_traces(p: int, n: int) -> tuple[int, ...]:
    return tuple(_engine(p, n).sextic_traces())


@lru_cache(maxsize=8)
def lfunction(p: int, direct: bool = False) -> LPolynomial:
    """The degree-8 L-polynomial of the family curve reduced mod p.

    Default path: count c_1..c_4, complete the coefficients through the
    functional equation (closure of inverse roots under g -> p^2/g), then
    re-verify against independently counted c_5 and c_6.  A sign ambiguity
    that c_5/c_6 cannot settle is an error, never a guess.  With
    direct=True all of c_1..c_8 are counted instead (small p only).
    """
    curve = build_family()
    if not good_prime(curve, p):
        raise LFunctionError(f"{p} is not a good prime for the family")
    if direct:
        cn = {n: fiber_trace_sum(curve, p, n) for n in range(1, 9)}
        b = _exp_series(cn, 8)
        if any(x.denominator != 1 for x in b):
            raise LFunctionError("direct expansion is not integral")
        coeffs = tuple(int(x) for x in b)
        L = LPolynomial(p, coeffs, tuple(sorted(cn.items())))
        L.functional_equation_sign()  # closure must hold
        _verify_weil(L)
        return L

    cn = {n: fiber_trace_sum(curve, p, n) for n in range(1, 5)}
    b4 = _exp_series(cn, 4)
    if any(x.denominator != 1 for x in b4):
        raise LFunctionError("counted coefficients are not integral")
    b4 = [int(x) for x in b4]
    candidates = []
    for sign in (1, -1):
        if sign == -1 and b4[4] != 0:
            continue  # b4 = sign * b4 forces b4 = 0 for the minus sign
        coeffs = tuple(b4 + [sign * p ** (8 - 2 * i) * b4[i] for i in (3, 2, 1, 0)])
        candidates.append(LPolynomial(p, coeffs, tuple(sorted(cn.items()))))
    c5 = fiber_trace_sum(curve, p, 5)
    c6 = fiber_trace_sum(curve, p, 6)
    survivors = [
        L
        for L in candidates
        if L.power_sum_coefficients(6)[4] == c5 and L.power_sum_coefficients(6)[5] == c6
    ]
    if len(survivors) > 1:
        raise LFunctionError("functional-equation sign ambiguous after c_5, c_6")
    if not survivors:
        raise LFunctionError(
            "functional-equation completion contradicts counted c_5/c_6"
        )
    L = survivors[0]
    counted = dict(L.counted)
    counted[5] = c5
    counted[6] = c6
    L = LPolynomial(p, L.coeffs, tuple(sorted(counted.items())))
    _verify_weil(L)
    return L


def _verify_weil(L: LPolynomial) -> None:
    """Inverse roots have |g| = p (checked numerically after exact factor removal)."""
    import numpy as np

    coeffs = list(L.coeffs)
    # strip exact unitary factors (1 -+ pu) first
    rem = rational_poly(*coeffs)
    for root_factor in (rational_poly(-1, L.p), rational_poly(1, L.p)):
        while True:
            q, r = divmod(rem, root_factor)
            if r.is_zero() and not q.is_zero():
                rem = q
            else:
                break
    cs = [float(rem.coeff(i)) for i in range(0, (rem.degree or 0) + 1)]
    if len(cs) > 1:
        inv_roots = np.roots(list(reversed(cs)))  # roots of sum c_i u^i
        for u in inv_roots:
            gamma = 1.0 / u
            if abs(abs(gamma) - L.p) > 1e-9 * L.p:
                raise LFunctionError(f"inverse root off the Weil circle: {gamma}")


def rank_bounds(L: LPolynomial, unity_order_bound: int = 60) -> tuple[int, int]:
    """(arith, geom): multiplicity of (pu - 1), and of all inverse roots p*zeta.

    Both are exact: the polynomial L(x/p) is divided by cyclotomic
    polynomials Phi_m for m up to the given order bound.
    """
    p = L.p
    scaled = Polynomial(
        tuple(Fraction(c, p**i) for i, c in enumerate(L.coeffs))
    )  # L(x/p)
    arith = 0
    rem = scaled
    phi1 = cyclotomic(1)
    while True:
        q, r = divmod(rem, phi1)
        if not r.is_zero():
            break
        rem = q
        arith += 1
    geom = 0
    rem = scaled
    for m in range(1, unity_order_bound + 1):
        phi = cyclotomic(m)
        if phi.degree > (rem.degree or 0):
            continue
        while True:
            q, r = divmod(rem, phi)
            if not r.is_zero():
                break
            rem = q
            geom += phi.degree
        if rem.degree == 0:
            break
    return arith, geom


# -- assembled rank report -------------------------------------------------------


@dataclass
class RankReport:
    z_rank_rational: int
    z_rank_cm: int
    arith_bound: int
    geom_bound: int
    p: int

    @property
    def rank(self) -> int | None:
        return self.z_rank_rational if self.z_rank_rational == self.arith_bound else None

    @property
    def geometric_rank(self) -> int | None:
        return self.z_rank_cm if self.z_rank_cm == self.geom_bound else None

    def to_json(self) -> dict:
        return {
            "rank_lower_bound": self.z_rank_rational,
            "rank_upper_bound": self.arith_bound,
            "rank": self.rank,
            "geometric_rank_lower_bound": self.z_rank_cm,
            "geometric_rank_upper_bound": self.geom_bound,
            "geometric_rank": self.geometric_rank,
            "reduction_prime": self.p,
        }


def rank_report(p: int = 17) -> RankReport:
    """Lower bounds from differentials, upper bounds from the mod-p L-function."""
    curve = build_family()
    w1 = pullback_differential(curve.p1)
    w2 = pullback_differential(curve.p2)
    zr = z_rank([w1, w2])
    cm = [w1, w2, pullback_differential(cm_twist(curve.p1)), pullback_differential(cm_twist(curve.p2))]
    zr_cm = z_rank(cm)
    L = lfunction(p)
    arith, geom = rank_bounds(L)
    return RankReport(zr, zr_cm, arith, geom, p)
