"""Classical two-cube identities, taxicab search, and near-miss families.

The symbolic checks expand everything as exact polynomials and demand the
zero polynomial; no identity is taken on faith.  The near-miss streams are
re-verified tuple by tuple in integer arithmetic before anything is
emitted, so a mis-transcribed generating function cannot slip through.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exact import Polynomial, RationalFunction, rational_poly, series_expand


class IdentityError(Exception):
    pass


@dataclass(frozen=True)
class CubeQuadruple:
    """x^3 + y^3 = z^3 + w^3, checked on construction."""

    x: Fraction
    y: Fraction
    z: Fraction
    w: Fraction

    def __post_init__(self):
        if self.x**3 + self.y**3 != self.z**3 + self.w**3:
            raise IdentityError(f"cube relation fails for {self}")

    def common_value(self) -> Fraction:
        return self.x**3 + self.y**3


@dataclass
class IdentityReport:
    name: str
    zero_polynomial: bool
    offending_monomial: tuple | None = None
    specializations: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {"name": self.name, "zero_polynomial": self.zero_polynomial}
        if self.offending_monomial is not None:
            out["offending_monomial"] = [str(v) for v in self.offending_monomial]
        out["specializations"] = self.specializations
        return out


# -- bivariate scaffolding: Polynomial in the outer variable over ------------
# -- Polynomial-in-the-inner-variable coefficients ---------------------------


def _inner(*coeffs) -> Polynomial:
    return rational_poly(*coeffs)


def _outer(*inner_polys) -> Polynomial:
    return Polynomial(tuple(inner_polys))


def _first_nonzero_monomial(f: Polynomial) -> tuple:
    for i, ci in enumerate(f.coeffs):
        if isinstance(ci, Polynomial):
            for j, cij in enumerate(ci.coeffs):
                if cij != 0:
                    return (i, j, cij)
        elif ci != 0:
            return (i, ci)
    raise ValueError("polynomial is zero")


def verify_ramanujan_1913() -> IdentityReport:
    """Check (6A^2-4AB+4B^2)^3 = (3A^2+5AB-5B^2)^3 + (4A^2-4AB+6B^2)^3 + (5A^2-5AB-3B^2)^3.

    Expanded as a polynomial in A over polynomials in B; the difference must
    be identically zero.  The report carries two integer specializations,
    including the one that reduces to 12^3 = (-1)^3 + 10^3 + 9^3 after
    division by 27.
    """
    # inner polynomials in B listed low-to-high, outer variable A
    lhs = _outer(_inner(0, 0, 4), _inner(0, -4), _inner(6))
    r1 = _outer(_inner(0, 0, -5), _inner(0, 5), _inner(3))
    r2 = _outer(_inner(0, 0, 6), _inner(0, -4), _inner(4))
    r3 = _outer(_inner(0, 0, -3), _inner(0, -5), _inner(5))
    diff = lhs**3 - (r1**3 + r2**3 + r3**3)
    report = IdentityReport("two-squares-parametrized cube identity (1913)", diff.is_zero())
    if not diff.is_zero():
        report.offending_monomial = _first_nonzero_monomial(diff)
        return report

    def special(a, b, scale=1):
        # outer variable A first, then the inner B
        vals = [p(Fraction(a))(Fraction(b)) / scale for p in (lhs, r1, r2, r3)]
        ok = vals[0] ** 3 == vals[1] ** 3 + vals[2] ** 3 + vals[3] ** 3
        return {
            "A": str(a),
            "B": str(b),
            "scale": str(scale),
            "cubes": [str(v) for v in vals],
            "holds": ok,
        }

    report.specializations = [special(1, 0), special(2, -1), special(2, -1, scale=3)]
    return report


def verify_entry20() -> IdentityReport:
    """Check the second-notebook Entry 20(iii) four-cube identity in M and P."""
    one_p = _inner(1, 1)  # 1 + P
    one_p2 = one_p * one_p
    t1 = _outer(
        _inner(0), _inner(-1) + 3 * one_p2, _inner(0), _inner(0), -3 * one_p,
        _inner(0), _inner(0), _inner(1),
    )  # M^7 - 3M^4(1+P) + M(3(1+P)^2 - 1)
    t2 = _outer(
        _inner(1, 3, 3), _inner(0), _inner(0), -3 * _inner(1, 2), _inner(0),
        _inner(0), _inner(2),
    )  # 2M^6 - 3M^3(1+2P) + (1+3P+3P^2)
    t3 = _outer(-_inner(1, 3, 3), _inner(0), _inner(0), _inner(0), _inner(0), _inner(0), _inner(1))
    rhs = _outer(
        _inner(0), _inner(-1, 0, 3), _inner(0), _inner(0), _inner(0, -3),
        _inner(0), _inner(0), _inner(1),
    )  # M^7 - 3M^4 P + M(3P^2 - 1)
    diff = t1**3 + t2**3 + t3**3 - rhs**3
    report = IdentityReport("second-notebook entry 20(iii) identity", diff.is_zero())
    if not diff.is_zero():
        report.offending_monomial = _first_nonzero_monomial(diff)
        return report

    def special(m, p):
        vals = [t(Fraction(m))(Fraction(p)) for t in (t1, t2, t3, rhs)]
        ok = vals[0] ** 3 + vals[1] ** 3 + vals[2] ** 3 == vals[3] ** 3
        return {"M": str(m), "P": str(p), "terms": [str(v) for v in vals], "holds": ok}

    report.specializations = [special(2, 0), special(1, 0)]
    return report


# -- Euler-equivalent third-notebook family ----------------------------------


class _MultiPoly:
    """Sparse multivariate polynomial over Q, keyed by exponent tuples."""

    __slots__ = ("terms", "nvars")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = dict(terms or {})

    @classmethod
    def var(cls, nvars: int, i: int) -> "_MultiPoly":
        key = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(nvars, {key: Fraction(1)})

    @classmethod
    def const(cls, nvars: int, c) -> "_MultiPoly":
        c = Fraction(c)
        return cls(nvars, {(0,) * nvars: c} if c else {})

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            nv = out.get(k, Fraction(0)) + v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return _MultiPoly(self.nvars, out)

    def __sub__(self, other):
        return self + other * Fraction(-1)

    def __mul__(self, other):
        if isinstance(other, Fraction):
            if not other:
                return _MultiPoly(self.nvars)
            return _MultiPoly(self.nvars, {k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                nv = out.get(k, Fraction(0)) + v1 * v2
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
        return _MultiPoly(self.nvars, out)

    def __pow__(self, e: int):
        result = _MultiPoly.const(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not self.terms


def euler_family_symbolic_check() -> bool:
    """The lambda-eliminated form of the third-notebook family is the zero polynomial.

    With N = a^2 + ab + b^2 and D = 3c^2 (so lambda = N/D), clearing D^6 from
    (a + lambda^2 c)^3 + (lambda b + c)^3 - (lambda a + c)^3 - (b + lambda^2 c)^3
    must leave the zero polynomial in a, b, c.
    """
    a = _MultiPoly.var(3, 0)
    b = _MultiPoly.var(3, 1)
    c = _MultiPoly.var(3, 2)
    N = a * a + a * b + b * b
    D = c * c * Fraction(3)
    t1 = a * D * D + N * N * c
    t2 = N * b + D * c
    t3 = N * a + D * c
    t4 = b * D * D + N * N * c
    diff = t1**3 + (t2**3) * (D**3) - (t3**3) * (D**3) - t4**3
    return diff.is_zero()


def verify_euler_family(alpha, beta, gamma) -> CubeQuadruple:
    """Build the quadruple (a + L^2 c, L b + c, L a + c, b + L^2 c), L = (a^2+ab+b^2)/(3c^2).

    gamma = 0 is rejected.  The cube relation is enforced by the
    CubeQuadruple constructor, exactly.
    """
    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    if gamma == 0:
        raise ValueError("gamma must be nonzero")
    lam = (alpha**2 + alpha * beta + beta**2) / (3 * gamma**2)
    return CubeQuadruple(
        alpha + lam**2 * gamma, lam * beta + gamma, lam * alpha + gamma, beta + lam**2 * gamma
    )


# -- taxicab search -----------------------------------------------------------


def taxicab_search(bound: int, reps: int = 2) -> list[tuple[int, list[tuple[int, int]]]]:
    """All n <= bound with at least `reps` representations n = a^3 + b^3, 1 <= a <= b.

    Pairs are collected in a sum-indexed hash table; output is ascending in n
    with representations sorted by the smaller leg.
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    if reps < 2:
        raise ValueError("reps must be >= 2")
    sums: dict[int, list[tuple[int, int]]] = {}
    a = 1
    while 2 * a**3 <= bound:
        a3 = a**3
        b = a
        while a3 + b**3 <= bound:
            sums.setdefault(a3 + b**3, []).append((a, b))
            b += 1
        a += 1
    out = [(n, sorted(ps)) for n, ps in sums.items() if len(ps) >= reps]
    out.sort()
    return out


# -- near-miss families x^3 + y^3 = z^3 +/- 1 ---------------------------------


class NearMissError(Exception):
    pass


@dataclass(frozen=True)
class NearMissConfig:
    """Three generating-function numerators over one shared denominator.

    ``sign_rule(n)`` states which of +1/-1 the n-th tuple must achieve; the
    stream starts at index ``offset``.  The denominator must not vanish at 0.
    """

    numerators: tuple[Polynomial, Polynomial, Polynomial]
    denominator: Polynomial
    sign_rule: Callable[[int], int]
    offset: int = 0
    name: str = "custom"

    def __post_init__(self):
        if len(self.numerators) != 3:
            raise ValueError("exactly three numerators required")
        if self.denominator.coeff(0) == 0:
            raise ValueError("denominator must not vanish at 0")

    @classmethod
    def expansion_at_zero(cls) -> "NearMissConfig":
        """The lost-notebook family from expanding at 0; signs alternate (+1 first)."""
        den = rational_poly(1, -82, -82, 1)
        nums = (
            rational_poly(1, 53, 9),
            rational_poly(2, -26, -12),
            rational_poly(2, 8, -10),
        )
        return cls(nums, den, lambda n: 1 if n % 2 == 0 else -1, 0, "zero")

    @classmethod
    def expansion_at_infinity(cls) -> "NearMissConfig":
        """The companion family from expanding the same functions at infinity.

        Substituting x -> 1/x and clearing powers turns each numerator into
        x * reverse(numerator); the denominator is palindromic, hence fixed.
        The constant term of every series is 0, so the stream starts at n = 1,
        and the achieved signs alternate starting with +1.
        """
        den = rational_poly(1, -82, -82, 1)
        base = (
            rational_poly(1, 53, 9),
            rational_poly(2, -26, -12),
            rational_poly(2, 8, -10),
        )
        nums = tuple(
            Polynomial((Fraction(0),) + tuple(reversed(p.coeffs))) for p in base
        )
        return cls(nums, den, lambda n: 1 if n % 2 == 1 else -1, 1, "infinity")


def nearmiss_stream(config: NearMissConfig, count: int) -> list[tuple[int, int, int, int, int]]:
    """First `count` tuples (n, a_n, b_n, c_n, eps_n) with a^3 + b^3 - c^3 = eps.

    Every tuple is verified by exact integer arithmetic before emission;
    a failure aborts with the offending index.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    total = config.offset + count
    series = [
        series_expand(RationalFunction(num, config.denominator), total)
        for num in config.numerators
    ]
    out = []
    for n in range(config.offset, total):
        vals = []
        for s in series:
            v = s[n]
            if v.denominator != 1:
                raise NearMissError(f"non-integer coefficient at n={n}: {v}")
            vals.append(int(v))
        a, b, c = vals
        eps = a**3 + b**3 - c**3
        want = config.sign_rule(n)
        if eps not in (1, -1) or eps != want:
            raise NearMissError(
                f"cube relation fails at n={n}: {a}^3+{b}^3-{c}^3 = {eps}, expected {want}"
            )
        out.append((n, a, b, c, eps))
    return out


def default_nearmiss_families() -> dict[str, NearMissConfig]:
    return {
        "zero": NearMissConfig.expansion_at_zero(),
        "infinity": NearMissConfig.expansion_at_infinity(),
    }
