"""Elliptic curve models and point counting.

Two models of the same j = 0 curves: the Hesse cubic X^3 + Y^3 = d and the
short Weierstrass form v^2 = u^3 - 432 d^2, with the explicit point map
between them.  The chord-tangent group law is generic over any field of
characteristic != 2, 3 (rationals, finite fields, rational function
fields).  Counting over F_q is direct enumeration in u with a quadratic
character lookup; the sextic trace table exploits that the trace of
v^2 = u^3 + A depends only on the sextic residue class of A.
"""

from __future__ import annotations

import concurrent.futures
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .exact import FiniteField, primes
from .exact.numbers import factorize


@dataclass(frozen=True)
class Point:
    x: Any = None
    y: Any = None
    at_infinity: bool = False

    @classmethod
    def infinity(cls) -> "Point":
        return cls(None, None, True)

    def __repr__(self):
        return "O" if self.at_infinity else f"({self.x}, {self.y})"


INFINITY = Point.infinity()


@dataclass(frozen=True)
class WeierstrassCurve:
    """v^2 = u^3 + A with A != 0 (discriminant -432 A^2 nonzero)."""

    A: Any

    def __post_init__(self):
        if self.A == 0:
            raise ValueError("A = 0 is singular")

    def contains(self, P: Point) -> bool:
        if P.at_infinity:
            return True
        return P.y * P.y == P.x * P.x * P.x + self.A


@dataclass(frozen=True)
class CubicTwistCurve:
    """X^3 + Y^3 = d with d != 0; group identity at the flex at infinity."""

    d: Fraction

    def __post_init__(self):
        if self.d == 0:
            raise ValueError("d must be nonzero")

    def contains(self, P: Point) -> bool:
        if P.at_infinity:
            return True
        return P.x**3 + P.y**3 == self.d


def neg_point(P: Point) -> Point:
    if P.at_infinity:
        return P
    return Point(P.x, -P.y)


def add_points(curve: WeierstrassCurve, P: Point, Q: Point) -> Point:
    """Chord-tangent addition; off-curve inputs are rejected."""
    if not curve.contains(P) or not curve.contains(Q):
        raise ValueError("point not on curve")
    if P.at_infinity:
        return Q
    if Q.at_infinity:
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return INFINITY
        # doubling (P == Q with y != 0)
        lam = (3 * (P.x * P.x)) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return Point(x3, y3)


def scalar_mul(curve: WeierstrassCurve, k: int, P: Point) -> Point:
    if k < 0:
        return scalar_mul(curve, -k, neg_point(P))
    R = INFINITY
    Q = P
    while k:
        if k & 1:
            R = add_points(curve, R, Q)
        Q = add_points(curve, Q, Q)
        k >>= 1
    return R


@dataclass(frozen=True)
class HesseWeierstrassMap:
    """Bijection between X^3 + Y^3 = d and v^2 = u^3 - 432 d^2.

    (x, y) -> (12d/(x+y), 36d(x-y)/(x+y)); the flex x + y = 0 direction maps
    to the point at infinity.
    """

    hesse: CubicTwistCurve
    weierstrass: WeierstrassCurve

    def to_weierstrass(self, P: Point) -> Point:
        if P.at_infinity:
            return INFINITY
        s = P.x + P.y
        if s == 0:
            return INFINITY
        d = self.hesse.d
        return Point(12 * d / s, 36 * d * (P.x - P.y) / s)

    def to_hesse(self, P: Point) -> Point:
        if P.at_infinity:
            return INFINITY
        if P.x == 0:
            raise ValueError("u = 0 has no affine Hesse preimage")
        d = self.hesse.d
        x = (36 * d + P.y) / (6 * P.x)
        y = (36 * d - P.y) / (6 * P.x)
        return Point(x, y)


def hesse_to_weierstrass(curve: CubicTwistCurve) -> HesseWeierstrassMap:
    return HesseWeierstrassMap(curve, WeierstrassCurve(-432 * curve.d * curve.d))


# -- point counting over finite fields ----------------------------------------


def _count_chunk(args) -> int:
    p, n, modulus, a_coeffs, start, end = args
    field = FiniteField(p, n, modulus)
    A = field.element(a_coeffs)
    chi = 0
    for k in range(start, end):
        u = field.from_index(k)
        chi += field.quadratic_character(u * u * u + A)
    return chi


def count_points(field: FiniteField, A, workers: int = 1) -> int:
    """#{(u,v): v^2 = u^3 + A} + 1 over F_q, by enumeration of u.

    Needs characteristic >= 5 and A != 0 (additive fibers are the caller's
    business).  With workers > 1 the u-range is partitioned; the additive
    reduction makes the result independent of the split.
    """
    if field.p < 5:
        raise ValueError("need characteristic >= 5")
    A = field.element(A)
    if A.is_zero():
        raise ValueError("singular curve (A = 0)")
    q = field.q
    if workers > 1 and q >= 1 << 10:
        cap = os.environ.get("TWOCUBES_MAX_WORKERS")
        if cap:
            workers = max(1, min(workers, int(cap)))
        bounds = [q * i // workers for i in range(workers + 1)]
        jobs = [
            (field.p, field.n, field.modulus, A.coeffs, bounds[i], bounds[i + 1])
            for i in range(workers)
        ]
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            chi = sum(pool.map(_count_chunk, jobs))
    else:
        chi = _count_chunk((field.p, field.n, field.modulus, A.coeffs, 0, q))
    count = q + 1 + chi
    a = q + 1 - count
    if a * a > 4 * q:
        raise ArithmeticError("Hasse bound violated")
    return count


def trace(field: FiniteField, A, workers: int = 1) -> int:
    return field.q + 1 - count_points(field, A, workers)


@dataclass(frozen=True)
class TraceTable:
    """Traces of v^2 = u^3 + A over F_q keyed by the sextic class of A.

    Built from six counts (one per class of the fixed generator); lookups
    cost one sextic residue symbol.
    """

    field: FiniteField
    entries: dict  # sextic symbol element -> trace

    def trace(self, A) -> int:
        A = self.field.element(A)
        return self.entries[self.field.sextic_residue_symbol(A)]

    def count(self, A) -> int:
        return self.field.q + 1 - self.trace(A)


def build_trace_table(field: FiniteField) -> TraceTable:
    if field.q % 6 != 1:
        raise ValueError("trace table needs q = 1 mod 6")
    g = field.generator()
    zeta = g ** ((field.q - 1) // 6)
    entries = {}
    rep = field.one()
    for j in range(6):
        entries[zeta**j] = trace(field, rep)
        rep = rep * g
    return TraceTable(field, entries)


# -- torsion bound over Q ------------------------------------------------------


def _has_rational_2_torsion(d: int) -> bool:
    # v = 0 forces u^3 = 432 d^2
    from .exact import icbrt

    m = 432 * d * d
    return icbrt(m) ** 3 == m


def _has_rational_3_torsion(d: int) -> bool:
    # u = 0 needs -432 d^2 square (negative, never); else u^3 = 1728 d^2,
    # and then v^2 = 1296 d^2 = (36 d)^2 holds automatically.
    from .exact import icbrt

    m = 1728 * d * d
    return icbrt(m) ** 3 == m


def torsion_order_bound(d: int, prime_count: int = 8) -> int:
    """Upper bound for the torsion order of X^3 + Y^3 = d over Q.

    Torsion injects into E(F_p) for every good p >= 5, so the order divides
    the gcd of #E(F_p) over the first `prime_count` good primes.  That gcd
    always carries a factor 3 for this family (the flex 3-torsion becomes
    rational whenever p = 1 mod 3, and supersingular counts p + 1 are
    divisible by 3 when p = 2 mod 3), so primes ell in {2, 3} are removed
    from the gcd when the exact ell-division equations have no rational
    solution.  A return of 1 certifies that the curve is torsion-free.
    """
    if d == 0:
        raise ValueError("d must be nonzero")
    g = 0
    used = 0
    A_int = -432 * d * d
    for p in primes():
        if p < 5 or (6 * d) % p == 0:
            continue
        field = FiniteField(p)
        g_new = count_points(field, field.element(A_int % p))
        g = g_new if g == 0 else _gcd(g, g_new)
        used += 1
        if g == 1 or used >= prime_count:
            break
    for ell, present in ((2, _has_rational_2_torsion), (3, _has_rational_3_torsion)):
        if g % ell == 0 and not present(d):
            while g % ell == 0:
                g //= ell
    return g


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def point_order(curve: WeierstrassCurve, P: Point, group_order: int) -> int:
    """Exact order of P given a multiple of it (the group order)."""
    if P.at_infinity:
        return 1
    if not scalar_mul(curve, group_order, P).at_infinity:
        raise ValueError("group_order is not a multiple of the point order")
    o = group_order
    for ell in factorize(group_order):
        while o % ell == 0 and scalar_mul(curve, o // ell, P).at_infinity:
            o //= ell
    return o


def subgroup_is_cyclic(curve: WeierstrassCurve, P: Point, Q: Point, group_order: int) -> bool:
    """Whether <P, Q> is cyclic, one prime at a time.

    For each prime ell dividing both orders, reduce to the ell-primary parts
    P', Q' with ord(P') >= ord(Q'); the span is cyclic at ell iff Q' lies in
    <P'>, tested by direct enumeration of the (small) cyclic group.
    """
    oP = point_order(curve, P, group_order)
    oQ = point_order(curve, Q, group_order)
    common = _gcd(oP, oQ)
    for ell in factorize(common) if common > 1 else ():
        a = _val(oP, ell)
        b = _val(oQ, ell)
        Pp = scalar_mul(curve, oP // ell**a, P)
        Qp = scalar_mul(curve, oQ // ell**b, Q)
        if a < b:
            Pp, Qp = Qp, Pp
            a, b = b, a
        R = INFINITY
        member = False
        for _ in range(ell**a):
            if R == Qp:
                member = True
                break
            R = add_points(curve, R, Pp)
        if not member:
            return False
    return True


def _val(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
