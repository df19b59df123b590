"""Exact arithmetic substrate: integers, rationals, Q(omega), polynomials,
rational functions, finite fields, and the vectorized log-table kernel."""

from .eisenstein import OMEGA, Eisenstein
from .ffield import FFElement, FiniteField, smallest_irreducible
from .numbers import cubefree_part, factorize, icbrt, is_probable_prime, primes
from .poly import (
    Polynomial,
    cyclotomic,
    poly_discriminant,
    poly_gcd,
    rational_poly,
    resultant,
)
from .ratfunc import RationalFunction, series_expand
from .zechlog import ZechLog

__all__ = [
    "OMEGA",
    "Eisenstein",
    "FFElement",
    "FiniteField",
    "Polynomial",
    "RationalFunction",
    "ZechLog",
    "cubefree_part",
    "cyclotomic",
    "factorize",
    "icbrt",
    "is_probable_prime",
    "poly_discriminant",
    "poly_gcd",
    "primes",
    "rational_poly",
    "resultant",
    "series_expand",
    "smallest_irreducible",
]
