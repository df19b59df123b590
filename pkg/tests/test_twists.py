"""Tests for specialization, twist tables, and rank certificates."""

import random
from fractions import Fraction

import pytest

from twocubes.elliptic import (
    Point,
    WeierstrassCurve,
    add_points,
    count_points,
    hesse_to_weierstrass,
    neg_point,
    scalar_mul,
)
from twocubes.exact import FiniteField, cubefree_part
from twocubes.function_field import build_family
from twocubes.twists import (
    SpecializationError,
    TwistRecord,
    rank2_certificate,
    specialize,
    twist_table,
)


@pytest.fixture(scope="module")
def family():
    return build_family()


def test_specialize_t3(family):
    r = specialize(3, family)
    assert r.k_t == 46683
    assert r.d == 1729
    assert (r.p1.x, r.p1.y) == (Fraction(46, 3), Fraction(-37, 3))
    assert (r.p2.x, r.p2.y) == (10, 9)
    assert r.p1.x**3 + r.p1.y**3 == 1729
    assert r.p2.x**3 + r.p2.y**3 == 1729


def test_specialize_t0(family):
    r = specialize(0, family)
    assert (r.k_t, r.d) == (189, 7)
    assert (r.p1.x, r.p1.y) == (Fraction(4, 3), Fraction(5, 3))
    assert (r.p2.x, r.p2.y) == (2, -1)


def test_specialize_t2(family):
    r = specialize(2, family)
    assert r.k_t == 3087 == 3**2 * 7**3
    assert r.d == 9
    assert (r.p1.x, r.p1.y) == (Fraction(20, 7), Fraction(-17, 7))
    assert (r.p2.x, r.p2.y) == (2, 1)


def test_specialize_rational_t(family):
    r = specialize(Fraction(1, 2), family)
    assert r.k_t == Fraction(3087, 64)
    assert r.d == 9
    for P in (r.p1, r.p2):
        assert P.x**3 + P.y**3 == 9


def test_specialize_consistency_random(family):
    rng = random.Random(79)
    for _ in range(20):
        t = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        assert family.p1.x(t) ** 3 + family.p1.y(t) ** 3 == family.k(t)
        r = specialize(t, family)
        d, c = cubefree_part(int(r.k_t * t.denominator**6))
        assert r.d == d
        assert r.p1.x**3 + r.p1.y**3 == r.d


def test_twist_table_0_to_3(family):
    table = twist_table(0, 3)
    assert [r.d for r in table.records] == [7, 7, 9, 1729]
    assert table.distinct_d == 3
    assert table.max_abs_d == 1729
    for r in table.records:
        assert r.p1.x**3 + r.p1.y**3 == r.d
        assert r.p2.x**3 + r.p2.y**3 == r.d
        assert all(e < 3 for e in __import__("sympy").factorint(r.d).values())


def test_twist_table_single_and_empty():
    single = twist_table(3, 3)
    assert len(single.records) == 1 and single.records[0].d == 1729
    empty = twist_table(5, 4)
    assert empty.records == [] and empty.distinct_d == 0 and empty.max_abs_d == 0


def test_certificate_found_for_t3(family):
    rec = specialize(3, family)
    out = rank2_certificate(rec, prime_budget=50)
    assert out.certificate is not None
    cert = out.certificate
    assert rec.certificate is cert
    # independently re-verify the witness: reduce and brute-force the subgroup
    p = cert.prime
    F = FiniteField(p)
    A = F.element((-432 * rec.d**2) % p)
    curve = WeierstrassCurve(A)
    m = hesse_to_weierstrass(rec.curve())
    r1w, r2w = m.to_weierstrass(rec.p1), m.to_weierstrass(rec.p2)
    r1 = Point(F.embed_fraction(r1w.x), F.embed_fraction(r1w.y))
    r2 = Point(F.embed_fraction(r2w.x), F.embed_fraction(r2w.y))
    group = {None}
    frontier = [None]
    while frontier:
        new = []
        for X in frontier:
            Xp = Point.infinity() if X is None else Point(*X)
            for g in (r1, r2):
                Y = add_points(curve, Xp, g)
                key = None if Y.at_infinity else (Y.x, Y.y)
                if key not in group:
                    group.add(key)
                    new.append(key)
        frontier = new
    n = len(group)
    cyclic = False
    for key in group:
        if key is None:
            continue
        P = Point(*key)
        order = 1
        R = P
        while not R.at_infinity:
            R = add_points(curve, R, P)
            order += 1
        if order == n:
            cyclic = True
            break
    assert not cyclic
    assert cert.group_order == count_points(F, A)


def test_dependent_points_never_certify(family):
    rec = specialize(3, family)
    m = hesse_to_weierstrass(rec.curve())
    w1 = m.to_weierstrass(rec.p1)
    double = m.to_hesse(add_points(m.weierstrass, w1, w1))
    dep = TwistRecord(rec.t, rec.k_t, rec.d, rec.p1, double)
    assert dep.p2.x**3 + dep.p2.y**3 == rec.d
    out = rank2_certificate(dep, prime_budget=25)
    assert out.certificate is None
    assert out.exhausted


def test_certificate_rejects_small_d():
    # synthetic record on X^3 + Y^3 = 2 (d <= 2: torsion hypothesis unavailable)
    rec = TwistRecord(
        Fraction(0), Fraction(2), 2, Point(Fraction(1), Fraction(1)), Point(Fraction(1), Fraction(1))
    )
    with pytest.raises(ValueError, match="d <= 2"):
        rank2_certificate(rec)


def test_exceptional_t0_is_exhausted(family):
    # P1(0) and P2(0) are dependent in E_7(Q) (P1 = -2 P2), so no prime can certify
    rec = specialize(0, family)
    m = hesse_to_weierstrass(rec.curve())
    w2 = m.to_weierstrass(rec.p2)
    minus_2p2 = neg_point(scalar_mul(m.weierstrass, 2, w2))
    assert m.to_hesse(minus_2p2) == rec.p1
    out = rank2_certificate(rec, prime_budget=20)
    assert out.exhausted


def test_specialize_rejects_roots_of_k():
    # the family k has no rational roots, so fabricate the failure mode directly
    fam = build_family()
    with pytest.raises(SpecializationError):
        # force it through a synthetic curve whose k vanishes at 1
        from twocubes.function_field import FunctionFieldCurve
        from twocubes.exact import rational_poly

        k = rational_poly(-1, 0, 0, 0, 0, 0, 1)  # T^6 - 1, vanishes at 1
        fake = FunctionFieldCurve(k, ((1, 0, -1),), 1, fam.p1, fam.p2)
        specialize(1, fake)


def test_table_with_certificates(family):
    table = twist_table(2, 3, certify=True, prime_budget=40)
    by_t = {int(r.t): r for r in table.records}
    assert by_t[3].certificate is not None
    assert by_t[2].certificate is not None or by_t[2].d == 9
