"""Multivariate Laurent polynomials with exact coefficients.

A monomial is a tuple of (variable, exponent) pairs sorted by variable name
with every exponent nonzero, so the constant monomial is (). Coefficients are
Fractions or Cyclotomics; zero coefficients are never stored.
"""
from fractions import Fraction

from . import upoly


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        e2 = d.get(v, 0) + e
        if e2:
            d[v] = e2
        else:
            del d[v]
    return tuple(sorted(d.items()))


def _mono_pow(a, k):
    return tuple((v, e * k) for v, e in a) if k else ()


def _coef(c):
    if isinstance(c, int):
        return Fraction(c)
    return c


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c != 0:
                    mono = tuple(sorted((v, e) for v, e in mono if e))
                    c = _coef(c)
                    if mono in clean:
                        c = clean[mono] + c
                        if c == 0:
                            del clean[mono]
                            continue
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def var(cls, name, exp=1):
        return cls._raw({((name, exp),): Fraction(1)} if exp else {(): Fraction(1)})

    @classmethod
    def const(cls, c):
        return cls._raw({(): _coef(c)} if c != 0 else {})

    @classmethod
    def monomial(cls, c, exps):
        return cls({tuple(exps.items()): c})

    # -- inspection -------------------------------------------------------

    @property
    def variables(self):
        return tuple(sorted({v for mono in self.terms for v, _ in mono}))

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get((), Fraction(0))

    def is_monomial(self):
        return len(self.terms) == 1

    def is_unit(self):
        """Units of a Laurent ring over a field are exactly the nonzero monomials."""
        return self.is_monomial()

    def coefficient(self, exps=None):
        mono = tuple(sorted((v, e) for v, e in (exps or {}).items() if e))
        return self.terms.get(mono, Fraction(0))

    def exponents(self, var):
        return sorted({dict(m).get(var, 0) for m in self.terms})

    # -- arithmetic -------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) or hasattr(other, "conj"):
            return LaurentPoly.const(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in o.terms.items():
            s = out.get(mono, 0) + c
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        if self.is_monomial():
            (m, c), = self.terms.items()
            return LaurentPoly._raw({_mono_pow(m, k): c ** k})
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv(self):
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of the Laurent ring")
        (m, c), = self.terms.items()
        return LaurentPoly._raw({_mono_pow(m, -1): 1 / c})

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.is_unit():
            return self * o.inv()
        if o.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        return self.divexact(o)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def divexact(self, other):
        """Quotient self/other when it exists in the Laurent ring, else ValueError."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        variables = sorted(set(self.variables) | set(other.variables))

        def key(mono):
            d = dict(mono)
            return tuple(d.get(v, 0) for v in variables)

        q_lead = max(other.terms, key=key)
        q_trail = min(other.terms, key=key)
        lc = other.terms[q_lead]
        floor = key(_mono_mul(min(self.terms, key=key), _mono_pow(q_trail, -1)))
        quotient = {}
        rem = self
        while not rem.is_zero():
            r_lead = max(rem.terms, key=key)
            mono = _mono_mul(r_lead, _mono_pow(q_lead, -1))
            if key(mono) < floor:
                raise ValueError(f"{other} does not divide {self}")
            c = rem.terms[r_lead] / lc
            quotient[mono] = c
            rem = rem - LaurentPoly._raw({mono: c}) * other
        return LaurentPoly(quotient)

    def conj(self):
        """Coefficient-wise conjugation (identity on rational coefficients)."""
        return LaurentPoly({m: (c.conj() if hasattr(c, "conj") else c)
                            for m, c in self.terms.items()})

    # -- evaluation -------------------------------------------------------

    def evaluate(self, point):
        """Substitute scalars for every variable; returns a scalar."""
        missing = set(self.variables) - set(point)
        if missing:
            raise KeyError(f"no value assigned to {sorted(missing)}")
        for v in self.variables:
            if point[v] == 0:
                raise ZeroDivisionError(f"variable {v} assigned zero")
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for v, e in mono:
                term = term * point[v] ** e
            total = total + term
        return total

    def subs(self, mapping):
        """Partial substitution; values may be scalars or LaurentPolys (units if
        a negative power is needed)."""
        out = LaurentPoly()
        for mono, c in self.terms.items():
            term = LaurentPoly.const(c)
            for v, e in mono:
                if v in mapping:
                    term = term * _as_poly(mapping[v]) ** e
                else:
                    term = term * LaurentPoly.var(v, e)
            out = out + term
        return out

    # -- univariate view --------------------------------------------------

    def univariate_var(self):
        vs = self.variables
        if len(vs) > 1:
            raise NotImplementedError(f"{self} is multivariate: {vs}")
        return vs[0] if vs else None

    def to_upoly(self, var):
        """Return (shift, coeffs) with self = var^shift * sum coeffs[i] var^i and
        coeffs[0] != 0 (shift = 0, coeffs = [] for zero)."""
        if self.is_zero():
            return 0, []
        exps = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            if set(d) - {var}:
                raise NotImplementedError(f"{self} is not univariate in {var}")
            exps[d.get(var, 0)] = c
        lo = min(exps)
        hi = max(exps)
        return lo, [exps.get(lo + i, Fraction(0)) for i in range(hi - lo + 1)]

    @classmethod
    def from_upoly(cls, coeffs, var, shift=0):
        return cls({((var, i + shift),): c for i, c in enumerate(coeffs) if c != 0})

    def canonical_associate(self, var=None):
        """Monic representative with zero var-valuation (univariate only)."""
        if self.is_zero():
            return self
        var = var or self.univariate_var()
        if var is None:
            return LaurentPoly.const(1)
        _, coeffs = self.to_upoly(var)
        return LaurentPoly.from_upoly(upoly.monic(coeffs), var)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        from .literals import format_laurent
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def _as_poly(v):
    return v if isinstance(v, LaurentPoly) else LaurentPoly.const(v)


def laurent_gcd(p, q):
    """Greatest common divisor of two univariate Laurent polynomials, as the
    canonical associate (monic ordinary polynomial, nonzero constant term)."""
    p, q = _as_poly(p), _as_poly(q)
    vs = set(p.variables) | set(q.variables)
    if len(vs) > 1:
        raise NotImplementedError(f"gcd only for univariate input, got variables {sorted(vs)}")
    if not vs:
        if p.is_zero() and q.is_zero():
            return LaurentPoly()
        return LaurentPoly.const(1)
    var = vs.pop()
    _, a = p.to_upoly(var)
    _, b = q.to_upoly(var)
    g = upoly.gcd(a, b)
    if not g:
        return LaurentPoly()
    return LaurentPoly.from_upoly(g, var).canonical_associate(var)
