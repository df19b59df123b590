"""Dense univariate polynomials over an arbitrary commutative coefficient ring.

Coefficients are stored lowest degree first.  Any coefficient type works as
long as it supports +, -, * with itself and with small Python ints; divmod,
gcd and resultants additionally need / (field coefficients).  Nesting is
allowed: a Polynomial over Polynomial coefficients is a bivariate
polynomial.  The zero polynomial has an empty coefficient tuple and degree
``None`` (a real sentinel, never -1).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, c, k: int) -> "Polynomial":
        return cls((0,) * k + (c,))

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        """Leading coefficient; raises on the zero polynomial."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return self + Polynomial((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Polynomial) else Polynomial((-other,)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Polynomial(out)

    def __rmul__(self, other):
        return Polynomial(tuple(other * c for c in self.coeffs))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, t):
        """Evaluate by Horner; t may live in any ring containing the coefficients."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def reversed(self, degree: int | None = None) -> "Polynomial":
        """Coefficients reversed, treating self as having the given degree."""
        d = self.degree if degree is None else degree
        if d is None:
            return Polynomial()
        cs = [self.coeff(i) for i in range(d + 1)]
        return Polynomial(tuple(reversed(cs)))

    # -- field-coefficient operations --------------------------------------

    def __divmod__(self, other: "Polynomial"):
        if not isinstance(other, Polynomial) or other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = Polynomial()
        r = self
        db, lb = other.degree, other.lc
        while not r.is_zero() and r.degree >= db:
            shift = r.degree - db
            factor = r.lc / lb
            term = Polynomial.monomial(factor, shift)
            q = q + term
            r = r - term * other
        return q, r

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        inv = self.lc
        return Polynomial(tuple(c / inv for c in self.coeffs))

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def format(self, var: str = "T") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeff(i)
            if c == 0:
                continue
            if i == 0:
                term = f"{c}"
            elif i == 1:
                term = f"{var}" if c == 1 else f"-{var}" if c == -1 else f"{c}*{var}"
            else:
                term = (
                    f"{var}^{i}" if c == 1 else f"-{var}^{i}" if c == -1 else f"{c}*{var}^{i}"
                )
            parts.append(term)
        out = " + ".join(parts).replace("+ -", "- ")
        return out


def rational_poly(*coeffs) -> Polynomial:
    """Polynomial over Q from low-to-high coefficients (ints, Fractions, strings)."""
    return Polynomial(tuple(Fraction(c) for c in coeffs))


def _is_rational_poly(f: Polynomial) -> bool:
    return all(isinstance(c, (Fraction, int)) for c in f.coeffs)


def _to_int_coeffs(f: Polynomial) -> list[int]:
    """Clear denominators and content; primitive integer coefficients."""
    from math import gcd, lcm

    den = 1
    for c in f.coeffs:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - db
            a = [x * lb for x in a]
            for i in range(db + 1):
                a[shift + i] -= c * b[i]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _primitive(a: list[int]) -> list[int]:
    from math import gcd

    g = 0
    for c in a:
        g = gcd(g, c)
    return [c // g for c in a] if g else a


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd over a coefficient field.

    Rational-coefficient inputs run a primitive pseudo-remainder sequence
    over Z (denominators cleared, content stripped per step), which keeps
    coefficient growth tame; other coefficient fields use plain Euclid.
    """
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if _is_rational_poly(f) and _is_rational_poly(g):
        a, b = _to_int_coeffs(f), _to_int_coeffs(g)
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _primitive(_int_prem(a, b))
            a, b = b, r
        return Polynomial(tuple(Fraction(c) for c in a)).monic()
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def resultant(f: Polynomial, g: Polynomial):
    """Resultant of f and g over a coefficient field, by the Euclidean scheme."""
    if f.is_zero() or g.is_zero():
        return Fraction(0)
    a, b = f, g
    res = 1
    sign = 1
    while b.degree > 0:
        r = a % b
        if r.is_zero():
            return 0 * a.lc
        if (a.degree * b.degree) % 2 == 1:
            sign = -sign
        res = res * b.lc ** (a.degree - r.degree)
        a, b = b, r
    # b is a nonzero constant
    res = res * b.lc**a.degree
    return sign * res


def poly_discriminant(f: Polynomial):
    """Discriminant via the resultant of f and f'; nonzero iff f is squarefree.

    Rejects constants.
    """
    d = f.degree
    if d is None or d < 1:
        raise ValueError("discriminant needs degree >= 1")
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> Polynomial:
    """The m-th cyclotomic polynomial over Q."""
    if m < 1:
        raise ValueError("m >= 1 required")
    num = Polynomial((Fraction(-1),) + (Fraction(0),) * (m - 1) + (Fraction(1),))
    for d in range(1, m):
        if m % d == 0:
            num = num // cyclotomic(d)
    return num
