"""Exact coefficient arithmetic: rationals, cyclotomics, Laurent polynomials."""
from fractions import Fraction

from .cyclotomic import Cyclotomic, cyclotomic_polynomial, totient
from .laurent import LaurentPoly, laurent_gcd
from .literals import (LiteralError, format_cyclotomic, format_laurent, format_rational,
                       format_scalar, parse_cyclotomic, parse_laurent, parse_rational,
                       parse_scalar)
from .quadratic import QuadraticNumber, rational_sqrt, sqrt_of

Rational = Fraction


def conj(a):
    """Complex conjugation; the identity on rationals."""
    if hasattr(a, "conj"):
        return a.conj()
    if isinstance(a, complex):
        return a.conjugate()
    return a


def inv(a):
    if a == 0:
        raise ZeroDivisionError("inverse of zero")
    if isinstance(a, int):
        return Fraction(1, a)
    if hasattr(a, "inv"):
        return a.inv()
    return 1 / a


def laurent_eval(p, point):
    """Evaluate a Laurent polynomial (or pass through a scalar) at a point."""
    if isinstance(p, LaurentPoly):
        return p.evaluate(point)
    return p


__all__ = [
    "Fraction", "Rational", "Cyclotomic", "LaurentPoly", "QuadraticNumber",
    "cyclotomic_polynomial", "totient", "laurent_gcd", "laurent_eval", "conj", "inv",
    "parse_scalar", "parse_rational", "parse_laurent", "parse_cyclotomic",
    "format_scalar", "format_rational", "format_laurent", "format_cyclotomic",
    "LiteralError", "rational_sqrt", "sqrt_of",
]
