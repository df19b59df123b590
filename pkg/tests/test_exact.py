"""Tests for the exact arithmetic substrate.

Derived expected values are recomputed by independent oracles (sympy
factorization/discriminants, hand recurrences, direct enumeration) rather
than trusted from the implementation under test.
"""

import random
from fractions import Fraction

import pytest
import sympy

from twocubes.exact import (
    OMEGA,
    Eisenstein,
    FiniteField,
    Polynomial,
    RationalFunction,
    ZechLog,
    cubefree_part,
    cyclotomic,
    factorize,
    poly_discriminant,
    poly_gcd,
    rational_poly,
    series_expand,
    smallest_irreducible,
)


# -- cubefree decomposition ----------------------------------------------------


def _cubefree_oracle(n: int) -> tuple[int, int]:
    sign = -1 if n < 0 else 1
    d, c = 1, 1
    for p, e in sympy.factorint(abs(n)).items():
        c *= p ** (e // 3)
        d *= p ** (e % 3)
    return sign * d, c


@pytest.mark.parametrize("n,expected", [(189, (7, 3)), (46683, (1729, 3)), (1, (1, 1))])
def test_cubefree_examples(n, expected):
    assert _cubefree_oracle(n) == expected  # oracle agrees with the frozen value
    assert cubefree_part(n) == expected


def test_cubefree_sign_and_zero():
    assert cubefree_part(-189) == (-7, 3)
    assert cubefree_part(-8) == (-1, 2)
    with pytest.raises(ValueError):
        cubefree_part(0)


def test_cubefree_random_reconstruction():
    rng = random.Random(20260809)
    for _ in range(200):
        a = rng.randint(1, 10**6)
        b = rng.randint(1, 10**6)
        n = a * b**3
        d, c = cubefree_part(n)
        assert d * c**3 == n
        assert all(e < 3 for e in sympy.factorint(d).values())


def test_cubefree_large_rough_inputs():
    # primes above the trial-division bound force the rho/perfect-power paths
    p1, p2, p3 = 2147483647, 1048583, 4294967311
    assert all(sympy.isprime(p) for p in (p1, p2, p3))
    n = (65537 * 97) * p1**3
    assert cubefree_part(n) == (65537 * 97, p1)
    n = p1 * p2**3
    assert cubefree_part(n) == (p1, p2)
    n = p3**2 * 5**4
    assert cubefree_part(n) == (p3**2 * 5, 5)


def test_factorize_matches_sympy():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(2, 10**9)
        assert factorize(n) == dict(sympy.factorint(n))


# -- polynomials ----------------------------------------------------------------


def _sympy_disc(f: Polynomial):
    x = sympy.Symbol("x")
    expr = sum(sympy.Rational(c) * x**i for i, c in enumerate(f.coeffs))
    return Fraction(str(sympy.discriminant(expr, x)))


@pytest.mark.parametrize(
    "coeffs,expected",
    [((1, 1, 1), Fraction(-3)), ((3, -3, 1), Fraction(-3)), ((1, -2, 1), Fraction(0))],
)
def test_discriminant_examples(coeffs, expected):
    f = rational_poly(*coeffs)
    assert _sympy_disc(f) == expected
    assert poly_discriminant(f) == expected


def test_discriminant_random_vs_sympy():
    rng = random.Random(11)
    for _ in range(40):
        deg = rng.randint(1, 5)
        coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(deg)]
        coeffs.append(Fraction(rng.randint(1, 9)))
        f = Polynomial(tuple(coeffs))
        assert poly_discriminant(f) == _sympy_disc(f)


def test_discriminant_rejects_constants():
    with pytest.raises(ValueError):
        poly_discriminant(rational_poly(5))


def test_polynomial_ring_laws():
    rng = random.Random(13)

    def rand_poly():
        return Polynomial(
            tuple(Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(0, 6)))
        )

    for _ in range(60):
        f, g, h = rand_poly(), rand_poly(), rand_poly()
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + g == g + f
        if not f.is_zero() and not g.is_zero():
            assert (f * g).degree == f.degree + g.degree


def test_zero_polynomial_degree_sentinel():
    assert Polynomial().degree is None
    assert rational_poly(0, 0).degree is None
    assert rational_poly(3).degree == 0


def test_divmod_and_gcd():
    f = rational_poly(-1, 0, 1)  # T^2 - 1
    g = rational_poly(1, 1)  # T + 1
    q, r = divmod(f, g)
    assert q == rational_poly(-1, 1) and r.is_zero()
    assert poly_gcd(f, g) == rational_poly(1, 1)


def test_cyclotomic_polys():
    assert cyclotomic(1) == rational_poly(-1, 1)
    assert cyclotomic(2) == rational_poly(1, 1)
    assert cyclotomic(6) == rational_poly(1, -1, 1)
    assert cyclotomic(12) == rational_poly(1, 0, -1, 0, 1)


# -- rational functions and series ----------------------------------------------


def test_series_examples():
    geo = RationalFunction(rational_poly(1), rational_poly(1, -1))
    assert series_expand(geo, 4) == [1, 1, 1, 1]
    odd = RationalFunction(rational_poly(0, 1), rational_poly(1, 0, -1))
    assert series_expand(odd, 5) == [0, 1, 0, 1, 0]
    f = RationalFunction(rational_poly(1, 53, 9), rational_poly(1, -82, -82, 1))
    # oracle: run the recurrence a_n = 82 a_{n-1} + 82 a_{n-2} - a_{n-3} by hand
    a0 = 1
    a1 = 82 * a0 + 53
    a2 = 82 * a1 + 82 * a0 + 9
    assert [a0, a1, a2] == [1, 135, 11161]
    assert series_expand(f, 3) == [a0, a1, a2]


def test_series_rejects_pole_at_zero():
    f = RationalFunction(rational_poly(1), rational_poly(0, 1))
    with pytest.raises(ZeroDivisionError):
        series_expand(f, 3)


def test_series_resummation_property():
    rng = random.Random(17)
    for _ in range(30):
        num = Polynomial(tuple(Fraction(rng.randint(-6, 6)) for _ in range(rng.randint(1, 4))))
        den_tail = [Fraction(rng.randint(-6, 6)) for _ in range(rng.randint(1, 4))]
        den = Polynomial((Fraction(rng.randint(1, 5)), *den_tail))
        f = RationalFunction(num, den)
        n = 12
        coeffs = series_expand(f, n)
        # den * series == num through degree n-1
        for k in range(n):
            acc = Fraction(0)
            for j in range(min(k, len(f.den.coeffs) - 1) + 1):
                acc += f.den.coeff(j) * coeffs[k - j]
            assert acc == f.num.coeff(k)


def test_ratfunc_evaluation_homomorphism():
    rng = random.Random(19)
    for _ in range(30):
        def rand_rf():
            num = Polynomial(tuple(Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 4))))
            den = Polynomial(
                tuple(Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(0, 3)))
                + (Fraction(rng.randint(1, 5)),)
            )
            return RationalFunction(num, den)

        f, g = rand_rf(), rand_rf()
        t = Fraction(rng.randint(-20, 20), rng.randint(1, 7))
        try:
            lhs = (f * g)(t)
            rhs = f(t) * g(t)
            s_lhs = (f + g)(t)
            s_rhs = f(t) + g(t)
        except ZeroDivisionError:
            continue
        assert lhs == rhs
        assert s_lhs == s_rhs


def test_ratfunc_normalization():
    f = RationalFunction(rational_poly(0, 2, 2), rational_poly(2, 2))  # 2T(T+1) / 2(T+1)
    assert f.is_polynomial()
    assert f.as_polynomial() == rational_poly(0, 1)
    assert f.den.lc == 1


# -- Q(omega) --------------------------------------------------------------------


def test_omega_relations():
    assert OMEGA**3 == 1
    assert OMEGA * OMEGA == Eisenstein(-1, -1)
    assert OMEGA**2 + OMEGA + 1 == 0


def test_eisenstein_field_ops():
    rng = random.Random(23)
    for _ in range(50):
        a = Eisenstein(Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5)))
        b = Eisenstein(Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5)))
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()
        assert (a * b).norm() == a.norm() * b.norm()
        if a != 0:
            assert a * a.inverse() == 1
            assert a.norm() > 0


# -- finite fields ----------------------------------------------------------------


def test_deterministic_moduli():
    assert smallest_irreducible(2, 3) == (1, 0, 1, 1)  # x^3 + x + 1
    assert smallest_irreducible(2, 2) == (1, 1, 1)  # x^2 + x + 1
    assert smallest_irreducible(17, 2) == (1, 1, 1)


def test_f7_ops():
    F7 = FiniteField(7)
    assert F7(3) * F7(5) == F7(1)
    assert F7.sextic_residue_symbol(F7(1)) == F7(1)
    with pytest.raises(ZeroDivisionError):
        F7(0).inverse()


def test_sextic_symbol_requires_q_1_mod_6():
    for p, n in ((5, 1), (11, 1), (2, 2)):
        F = FiniteField(p, n)
        with pytest.raises(ValueError):
            F.sextic_residue_symbol(F(1))


def test_sextic_symbol_is_sixth_root():
    F = FiniteField(13)
    for a in range(1, 13):
        s = F.sextic_residue_symbol(F(a))
        assert s**6 == F.one()


def test_f289_group_order():
    F = FiniteField(17, 2)
    assert F.q - 1 == 288
    g = F.generator()
    assert g**288 == F.one()
    assert g**144 != F.one()


def test_frobenius_identity():
    rng = random.Random(29)
    for (p, n) in ((7, 1), (13, 1), (17, 2), (5, 3), (2, 4)):
        F = FiniteField(p, n)
        for _ in range(200):
            x = F.from_index(rng.randrange(F.q))
            assert x**F.q == x


def test_field_inverse_random():
    rng = random.Random(31)
    F = FiniteField(17, 4)
    for _ in range(50):
        x = F.from_index(rng.randrange(1, F.q))
        assert x * x.inverse() == F.one()


def test_embed_fraction():
    F = FiniteField(11)
    assert F.embed_fraction(Fraction(1, 2)) == F(6)  # 2*6 = 12 = 1
    with pytest.raises(ZeroDivisionError):
        F.embed_fraction(Fraction(3, 11))


# -- Zech-log engine ---------------------------------------------------------------


def test_zechlog_matches_exact_powers():
    rng = random.Random(37)
    F = FiniteField(17, 2)
    z = ZechLog(F)
    for _ in range(40):
        e = rng.randrange(F.q - 1)
        elem = z.g**e
        assert z.log(elem) == e
    # Zech identity on sampled indices
    for _ in range(40):
        k = rng.randrange(F.q - 1)
        zk = int(z.zech[k])
        lhs = F.one() + z.g**k
        if zk < 0:
            assert lhs.is_zero()
        else:
            assert z.g**zk == lhs


def test_zechlog_traces_vs_direct_counts():
    from twocubes.elliptic import count_points

    F = FiniteField(17, 2)
    z = ZechLog(F)
    traces = z.sextic_traces()
    for j in range(6):
        A = z.g**j
        assert F.q + 1 - count_points(F, A) == traces[j]


def test_zechlog_cube_classes_vs_direct():
    F = FiniteField(13)
    z = ZechLog(F)
    # f(t) = 2(t - 3)(t - 5)
    roots = [F(3), F(5)]
    unit = F(2)
    counts, n_bad = z.cube_class_counts(unit, roots)
    direct = [0, 0, 0]
    bad = 0
    for idx in range(1, 13):
        t = F.from_index(idx)
        v = unit * (t - F(3)) * (t - F(5))
        if v.is_zero():
            bad += 1
            continue
        direct[z.log(v) % 3] += 1
    assert counts == direct
    assert n_bad == bad == 2
