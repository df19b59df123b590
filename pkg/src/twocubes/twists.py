"""Specializing T -> t: cubic twists X^3 + Y^3 = d with rank certificates.

Every specialization is normalized to its cube-free twist d (coordinates
absorb the cube factor), and a rank >= 2 certificate is a good prime p
where the two reduced points generate a non-cyclic subgroup of E(F_p):
the image of a rank <= 1 torsion-free Mordell-Weil group under the
reduction homomorphism is cyclic, so a non-cyclic image plus a torsion
bound of 1 proves rank >= 2 unconditionally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elliptic import (
    CubicTwistCurve,
    Point,
    WeierstrassCurve,
    count_points,
    hesse_to_weierstrass,
    point_order,
    subgroup_is_cyclic,
    torsion_order_bound,
)
from .exact import FiniteField, cubefree_part, primes
from .function_field import FunctionFieldCurve, build_family


@dataclass(frozen=True)
class RankCertificate:
    """A good prime where the reduced points generate a non-cyclic group."""

    prime: int
    group_order: int
    order_p1: int
    order_p2: int
    torsion_bound: int

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "group_order": str(self.group_order),
            "order_p1": str(self.order_p1),
            "order_p2": str(self.order_p2),
            "torsion_bound": self.torsion_bound,
        }


@dataclass
class TwistRecord:
    t: Fraction
    k_t: Fraction
    d: int
    p1: Point
    p2: Point
    certificate: RankCertificate | None = None

    def curve(self) -> CubicTwistCurve:
        return CubicTwistCurve(Fraction(self.d))

    def to_json(self) -> dict:
        out = {
            "t": str(self.t),
            "k": str(self.k_t),
            "d": str(self.d),
            "x1": str(self.p1.x),
            "y1": str(self.p1.y),
            "x2": str(self.p2.x),
            "y2": str(self.p2.y),
        }
        out["cert_prime"] = self.certificate.prime if self.certificate else None
        return out


class SpecializationError(Exception):
    pass


def specialize(t, family: FunctionFieldCurve | None = None) -> TwistRecord:
    """Evaluate the family at T = t and normalize to the cube-free twist.

    Rational t is cleared by b^6 (b the denominator): points scale by b^2,
    then both coordinates are divided by the cube factor c of k(t) b^6, so
    the record's points sit exactly on X^3 + Y^3 = d with d cube-free.
    """
    fam = family or build_family()
    t = Fraction(t)
    k_t = fam.k(t)
    if k_t == 0:
        raise SpecializationError(f"k({t}) = 0 is not an elliptic curve")
    b = t.denominator
    k_int = k_t * b**6
    assert k_int.denominator == 1
    d, c = cubefree_part(int(k_int))
    scale = Fraction(b * b, c)
    pts = []
    for sec in (fam.p1, fam.p2):
        x = sec.x(t) * scale
        y = sec.y(t) * scale
        if x**3 + y**3 != d:
            raise SpecializationError(f"scaled point off the twist at t = {t}")
        pts.append(Point(x, y))
    return TwistRecord(t, k_t, d, pts[0], pts[1])


@dataclass(frozen=True)
class CertificateOutcome:
    certificate: RankCertificate | None
    primes_tried: int
    reason: str

    @property
    def exhausted(self) -> bool:
        return self.certificate is None


def rank2_certificate(record: TwistRecord, prime_budget: int = 50) -> CertificateOutcome:
    """Search good primes for a non-cyclic reduction image of (P1, P2).

    Requires d > 2 (so the curve is torsion-free once the computed torsion
    bound is 1).  Exhausting the budget is a no-certificate outcome, not a
    disproof.
    """
    if record.d <= 2:
        raise ValueError("d <= 2: torsion-freeness hypothesis unavailable")
    if record.p1.at_infinity or record.p2.at_infinity:
        raise ValueError("certificate needs two affine points")
    tb = torsion_order_bound(record.d)
    if tb != 1:
        return CertificateOutcome(None, 0, f"torsion bound {tb} != 1")
    m = hesse_to_weierstrass(record.curve())
    w1 = m.to_weierstrass(record.p1)
    w2 = m.to_weierstrass(record.p2)
    if w1.at_infinity or w2.at_infinity:
        raise ValueError("points map to the identity")
    denominators = 1
    for P in (w1, w2):
        denominators *= P.x.denominator * P.y.denominator
    tried = 0
    for p in primes():
        if tried >= prime_budget:
            break
        if p < 5 or (6 * record.d) % p == 0 or denominators % p == 0:
            continue
        tried += 1
        field = FiniteField(p)
        A = field.element((-432 * record.d * record.d) % p)
        curve_p = WeierstrassCurve(A)
        r1 = Point(field.embed_fraction(w1.x), field.embed_fraction(w1.y))
        r2 = Point(field.embed_fraction(w2.x), field.embed_fraction(w2.y))
        if r1.at_infinity or r2.at_infinity:
            continue
        order = count_points(field, A)
        if not subgroup_is_cyclic(curve_p, r1, r2, order):
            cert = RankCertificate(
                p,
                order,
                point_order(curve_p, r1, order),
                point_order(curve_p, r2, order),
                tb,
            )
            record.certificate = cert
            return CertificateOutcome(cert, tried, "non-cyclic image")
    return CertificateOutcome(None, tried, "budget exhausted")


@dataclass
class TwistTable:
    records: list[TwistRecord]
    distinct_d: int
    max_abs_d: int

    def to_json(self) -> dict:
        return {
            "records": [r.to_json() for r in self.records],
            "summary": {"distinct_d": self.distinct_d, "max_abs_d": str(self.max_abs_d)},
        }


def twist_table(
    t_from: int,
    t_to: int,
    certify: bool = False,
    prime_budget: int = 50,
) -> TwistTable:
    """One record per integer t in [t_from, t_to]; roots of k are skipped."""
    fam = build_family()
    records = []
    for t in range(t_from, t_to + 1):
        try:
            rec = specialize(t, fam)
        except SpecializationError:
            continue
        if certify and rec.d > 2:
            rank2_certificate(rec, prime_budget)
        records.append(rec)
    ds = {r.d for r in records}
    return TwistTable(records, len(ds), max((abs(d) for d in ds), default=0))
