"""Rational functions num/den over a coefficient field, in lowest terms.

The denominator is kept monic and coprime to the numerator.  Taylor
expansion at 0 runs the linear recurrence induced by the denominator.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, poly_gcd


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            num = Polynomial((num,))
        if den is None:
            den = Polynomial((Fraction(1),)) if not num.is_zero() else Polynomial((1,))
        elif not isinstance(den, Polynomial):
            den = Polynomial((den,))
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num = num
            self.den = Polynomial((1,))
            return
        g = poly_gcd(num, den)
        if g.degree and g.degree > 0:
            num, den = num // g, den // g
        lead = den.lc
        self.num = Polynomial(tuple(c / lead for c in num.coeffs))
        self.den = Polynomial(tuple(c / lead for c in den.coeffs))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return RationalFunction(Polynomial((other,)))

    def __add__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return (RationalFunction(Polynomial((1,))) / self) ** (-e)
        return RationalFunction(self.num**e, self.den**e)

    def derivative(self) -> "RationalFunction":
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __call__(self, t):
        d = self.den(t)
        if d == 0:
            raise ZeroDivisionError(f"pole at {t}")
        return self.num(t) / d

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError("not a polynomial")
        return self.num  # den is the constant 1 after normalization

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Polynomial):
            return self.is_polynomial() and self.num == other
        if other == 0:
            return self.num.is_zero()
        return self.is_polynomial() and self.num == other

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def format(self, var: str = "T") -> str:
        if self.den.degree == 0:
            return self.num.format(var)
        return f"({self.num.format(var)}) / ({self.den.format(var)})"


def series_expand(f: RationalFunction, n: int) -> list:
    """First n Taylor coefficients of f at 0.

    Requires den(0) != 0; coefficient k is produced by the recurrence
    den_0*a_k = num_k - sum_{j>=1} den_j*a_{k-j}.
    """
    if n < 0:
        raise ValueError("need n >= 0")
    d0 = f.den.coeff(0)
    if d0 == 0:
        raise ZeroDivisionError("denominator vanishes at 0; no expansion there")
    coeffs = []
    dn = f.den.coeffs
    for k in range(n):
        acc = f.num.coeff(k)
        for j in range(1, min(k, len(dn) - 1) + 1):
            acc = acc - dn[j] * coeffs[k - j]
        coeffs.append(acc / d0)
    return coeffs
