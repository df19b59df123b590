"""Finite fields F_{p^n} with a deterministic modulus choice.

Elements are coefficient tuples over F_p modulo the lexicographically
smallest monic irreducible of degree n (coefficients compared low-to-high).
That makes every field construction, generator choice and golden value
reproducible.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .numbers import factorize, is_probable_prime

# -- bare int-list polynomial arithmetic mod p (used below the class layer) --


def _ptrim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _ptrim(out)


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    # m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] % p
        if c:
            shift = len(a) - 1 - dm
            for i, cm in enumerate(m):
                a[shift + i] = (a[shift + i] - c * cm) % p
        a.pop()
    return _ptrim(a)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        inv = pow(b[-1], p - 2, p)
        bm = [c * inv % p for c in b]
        a, b = b, _pmod(a, bm, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _ppow_x(e: int, m: list[int], p: int) -> list[int]:
    """x**e mod m."""
    result = [1]
    base = _pmod([0, 1], m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin test for monic f over F_p."""
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    xpn = _ppow_x(p**n, f, p)
    if _ptrim([(c - x) % p for c, x in itertools.zip_longest(xpn, [0, 1], fillvalue=0)]):
        return False
    for r in factorize(n):
        xq = _ppow_x(p ** (n // r), f, p)
        h = _ptrim([(c - x) % p for c, x in itertools.zip_longest(xq, [0, 1], fillvalue=0)])
        if len(_pgcd(list(f), h, p)) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over F_p."""
    if n == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=n):
        if tail[0] == 0:
            continue
        f = list(tail) + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise ArithmeticError("no irreducible found")  # unreachable


class FiniteField:
    """F_{p^n}; construct elements with field(value) or field.from_index(i)."""

    def __init__(self, p: int, n: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        if n < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.n = n
        self.q = p**n
        if modulus is None:
            modulus = smallest_irreducible(p, n)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != n + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree n")
            if not _is_irreducible(list(modulus), p):
                raise ValueError("modulus is reducible")
        self.modulus = modulus
        # x^(n+i) mod modulus for i = 0..n-2, used in reduction
        self._xpow = []
        cur = [(-c) % p for c in modulus[:-1]]
        for _ in range(max(n - 1, 0)):
            self._xpow.append(tuple(cur) + (0,) * (n - len(cur)))
            cur = [0] + cur
            if len(cur) > n:
                top = cur.pop()
                if top:
                    cur = [
                        (c + top * r) % p
                        for c, r in itertools.zip_longest(cur, self._xpow[0], fillvalue=0)
                    ]
        self._squares = None
        self._generator = None

    # -- element construction ---------------------------------------------

    def element(self, value) -> "FFElement":
        if isinstance(value, FFElement):
            if value.field != self:
                raise ValueError("element from a different field")
            return value
        if isinstance(value, int):
            return FFElement(self, (value % self.p,) + (0,) * (self.n - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.n:
            raise ValueError("too many coefficients")
        return FFElement(self, coeffs + (0,) * (self.n - len(coeffs)))

    __call__ = element

    def zero(self) -> "FFElement":
        return self.element(0)

    def one(self) -> "FFElement":
        return self.element(1)

    def x(self) -> "FFElement":
        return self.element((0, 1)) if self.n > 1 else self.element(0)

    def from_index(self, k: int) -> "FFElement":
        """Element number k in base-p digit order (0 <= k < q)."""
        if not 0 <= k < self.q:
            raise ValueError("index out of range")
        digits = []
        for _ in range(self.n):
            digits.append(k % self.p)
            k //= self.p
        return FFElement(self, tuple(digits))

    def elements(self):
        return (self.from_index(k) for k in range(self.q))

    # -- field-level operations ---------------------------------------------

    def generator(self) -> "FFElement":
        """Smallest (in index order) generator of the multiplicative group."""
        if self._generator is not None:
            return self._generator
        cofactors = [(self.q - 1) // r for r in factorize(self.q - 1)]
        one = self.one()
        for k in range(1, self.q):
            g = self.from_index(k)
            if all(g**c != one for c in cofactors):
                self._generator = g
                return g
        raise ArithmeticError("no generator found")  # unreachable

    def sextic_residue_symbol(self, a: "FFElement") -> "FFElement":
        """a^((q-1)/6), one of the six sixth roots of unity; needs q = 1 mod 6."""
        if self.q % 6 != 1:
            raise ValueError(f"q = {self.q} is not 1 mod 6")
        a = self.element(a)
        if a.is_zero():
            raise ValueError("sextic symbol of zero")
        return a ** ((self.q - 1) // 6)

    def quadratic_character(self, a: "FFElement") -> int:
        """+1 for nonzero squares, -1 for nonsquares, 0 for zero."""
        a = self.element(a)
        if a.is_zero():
            return 0
        if self.q <= 1 << 20:
            if self._squares is None:
                self._squares = frozenset(
                    (e * e).coeffs for e in self.elements() if not e.is_zero()
                )
            return 1 if a.coeffs in self._squares else -1
        return 1 if a ** ((self.q - 1) // 2) == self.one() else -1

    def embed_fraction(self, fr) -> "FFElement":
        """Reduce a rational number mod p; raises if p divides the denominator."""
        den = fr.denominator
        if den % self.p == 0:
            raise ZeroDivisionError(f"denominator divisible by {self.p}")
        return self.element(fr.numerator) / self.element(den)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        return f"FiniteField({self.p}, {self.n})" if self.n > 1 else f"FiniteField({self.p})"


class FFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other) -> "FFElement":
        if isinstance(other, FFElement):
            if other.field != self.field:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        raise TypeError(f"cannot coerce {other!r} into {self.field!r}")

    def __add__(self, other):
        o = self._coerce(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        f = self.field
        p, n = f.p, f.n
        if n == 1:
            return FFElement(f, (self.coeffs[0] * o.coeffs[0] % p,))
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] = (prod[i + j] + a * b) % p
        out = list(prod[:n])
        for i in range(n, 2 * n - 1):
            c = prod[i]
            if c:
                red = f._xpow[i - n]
                for j in range(n):
                    out[j] = (out[j] + c * red[j]) % p
        return FFElement(f, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "FFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        f = self.field
        p = f.p
        if f.n == 1:
            return FFElement(f, (pow(self.coeffs[0], p - 2, p),))
        # extended Euclid with the modulus
        r0, r1 = list(f.modulus), _ptrim(list(self.coeffs))
        t0, t1 = [], [1]
        while r1:
            inv = pow(r1[-1], p - 2, p)
            r1m = [c * inv % p for c in r1]
            q = []
            rem = list(r0)
            dm = len(r1m) - 1
            while rem and len(rem) - 1 >= dm:
                c = rem[-1]
                shift = len(rem) - 1 - dm
                if c:
                    while len(q) < shift + 1:
                        q.append(0)
                    q[shift] = (q[shift] + c * inv) % p
                    for i, cm in enumerate(r1m):
                        rem[shift + i] = (rem[shift + i] - c * cm) % p
                rem.pop()
            rem = _ptrim(rem)
            r0, r1 = r1, rem
            qt1 = _pmul(q, t1, p)
            t0, t1 = t1, _ptrim(
                [(a - b) % p for a, b in itertools.zip_longest(t0, qt1, fillvalue=0)]
            )
        # r0 is now a nonzero constant times gcd = constant
        c_inv = pow(r0[0], p - 2, p)
        t0 = [c * c_inv % p for c in t0]
        return f.element(t0)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_index(self) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * self.field.p + c
        return out

    def __eq__(self, other):
        if isinstance(other, FFElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.field.element(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.n, self.coeffs))

    def __repr__(self):
        return f"FF({self.field.p}^{self.field.n}:{list(self.coeffs)})"
