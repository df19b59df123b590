"""The field Q(omega), omega a primitive cube root of unity (omega^2 = -1 - omega).

Elements are a + b*omega with rational a, b.  This is Q(sqrt(-3)):
sqrt(-3) = 1 + 2*omega.
"""

from __future__ import annotations

from fractions import Fraction


class Eisenstein:
    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def _coerce(x) -> "Eisenstein":
        if isinstance(x, Eisenstein):
            return x
        return Eisenstein(x)

    def __add__(self, other):
        o = self._coerce(other)
        return Eisenstein(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Eisenstein(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        # (a + b*w)(c + d*w) with w^2 = -1 - w
        a, b, c, d = self.a, self.b, o.a, o.b
        return Eisenstein(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conjugate(self) -> "Eisenstein":
        """omega -> omega^2."""
        return Eisenstein(self.a - self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> "Eisenstein":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conjugate()
        return Eisenstein(c.a / n, c.b / n)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Eisenstein(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        if isinstance(other, Eisenstein):
            return self.a == other.a and self.b == other.b
        try:
            return self.b == 0 and self.a == other
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        if self.b == 0:
            return f"Eisenstein({self.a})"
        return f"Eisenstein({self.a}, {self.b})"


OMEGA = Eisenstein(0, 1)
