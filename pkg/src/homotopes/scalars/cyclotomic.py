"""Elements of the cyclotomic field Q(zeta_m) in the power basis.

An element is a tuple of phi(m) rationals, the coefficients of
1, z, ..., z^(phi(m)-1) after reduction modulo the m-th cyclotomic
polynomial. Operands with different conductors are lifted into the field of
the least common conductor before combining.
"""
import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import upoly


def _lcm(a, b):
    return a * b // gcd(a, b)


def _divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def _mobius(n):
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


@lru_cache(maxsize=None)
def totient(m):
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients of Phi_m, low degree first."""
    p = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        p, rem = upoly.divmod_(p, list(cyclotomic_polynomial(d)))
        assert not rem
    return tuple(int(c) for c in p)


@lru_cache(maxsize=None)
def _power_table(m):
    """Reduced coefficient vectors of z^k for 0 <= k < m."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    for k in range(m):
        mono = [0] * k + [1]
        _, rem = upoly.divmod_(mono, list(phi))
        rows.append(tuple(Fraction(rem[i]) if i < len(rem) else Fraction(0) for i in range(deg)))
    return tuple(rows)


@lru_cache(maxsize=None)
def _int_table(m):
    return tuple(tuple(int(v) for v in row) for row in _power_table(m))


def _to_ints(coeffs):
    """(integer numerators, common denominator) of a rational vector."""
    den = 1
    for c in coeffs:
        d = c.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _from_powers(m, acc, den):
    """Element sum_k acc[k] z^k / den, with k ranging over 0..m-1."""
    table = _int_table(m)
    out = [0] * len(table[0])
    for k, c in enumerate(acc):
        if c:
            for i, v in enumerate(table[k]):
                if v:
                    out[i] += c * v
    if den == 1:
        return Cyclotomic._from_vector(m, [Fraction(v) for v in out])
    return Cyclotomic._from_vector(m, [Fraction(v, den) for v in out])


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    return None


class Cyclotomic:
    """Exact element of Q(zeta_m)."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m, coeffs=()):
        if m < 1:
            raise ValueError("conductor must be positive")
        phi = len(cyclotomic_polynomial(m)) - 1
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > phi:
            _, coeffs = upoly.divmod_(coeffs, list(cyclotomic_polynomial(m)))
        coeffs = list(coeffs) + [Fraction(0)] * (phi - len(coeffs))
        self.m = m
        self.coeffs = tuple(coeffs)

    @classmethod
    def zeta(cls, m, k=1):
        return cls._from_vector(m, _power_table(m)[k % m])

    @classmethod
    def rational(cls, value, m=1):
        return cls(m, [Fraction(value)])

    @classmethod
    def _from_vector(cls, m, vec):
        obj = cls.__new__(cls)
        obj.m = m
        obj.coeffs = tuple(vec)
        return obj

    def terms(self):
        """Nonzero power-basis coefficients as {exponent: Fraction}."""
        return {k: c for k, c in enumerate(self.coeffs) if c != 0}

    def lift(self, m):
        """The same element viewed in Q(zeta_m); m must be a multiple of self.m."""
        if m == self.m:
            return self
        if m % self.m:
            raise ValueError(f"cannot lift conductor {self.m} into {m}")
        step = m // self.m
        ints, den = _to_ints(self.coeffs)
        acc = [0] * m
        for k, c in enumerate(ints):
            if c:
                acc[(k * step) % m] += c
        return _from_powers(m, acc, den)

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            m = _lcm(self.m, other.m)
            return self.lift(m), other.lift(m)
        f = _as_fraction(other)
        if f is None:
            return None
        return self, Cyclotomic(self.m, [f])

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic._from_vector(a.m, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._from_vector(self.m, [-x for x in self.coeffs])

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return Cyclotomic._from_vector(a.m, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        f = _as_fraction(other)
        if f is not None:
            return Cyclotomic._from_vector(self.m, [x * f for x in self.coeffs])
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b = self._coerce(other)
        m = a.m
        ia, da = _to_ints(a.coeffs)
        ib, db = _to_ints(b.coeffs)
        nb = [(j, y) for j, y in enumerate(ib) if y]
        acc = [0] * m
        for i, x in enumerate(ia):
            if x:
                for j, y in nb:
                    acc[(i + j) % m] += x * y
        return _from_powers(m, acc, da * db)

    __rmul__ = __mul__

    def inv(self):
        if self == 0:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        g, a, _ = upoly.xgcd(upoly.strip(self.coeffs), list(cyclotomic_polynomial(self.m)))
        assert g == [1], g
        return Cyclotomic(self.m, a)

    def __truediv__(self, other):
        f = _as_fraction(other)
        if f is not None:
            if f == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / f)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        f = _as_fraction(other)
        if f is None:
            return NotImplemented
        return self.inv() * f

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        k = abs(k)
        result = Cyclotomic(self.m, [1])
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self):
        """Complex conjugation zeta -> zeta^-1."""
        return self._permute_powers(-1)

    def _permute_powers(self, a):
        m = self.m
        ints, den = _to_ints(self.coeffs)
        acc = [0] * m
        for k, c in enumerate(ints):
            if c:
                acc[(a * k) % m] += c
        return _from_powers(m, acc, den)

    def galois(self, a):
        """Image under the automorphism zeta -> zeta^a, gcd(a, m) = 1."""
        if gcd(a, self.m) != 1:
            raise ValueError("Galois exponent must be a unit mod m")
        return self._permute_powers(a)

    def normalized_trace(self):
        """Tr(a)/phi(m); invariant under change of conductor."""
        total = Fraction(0)
        for k, c in enumerate(self.coeffs):
            if c:
                q = self.m // gcd(k, self.m)
                total += c * Fraction(_mobius(q), totient(q))
        return total

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.m)
        return sum((complex(float(c)) * z ** k for k, c in enumerate(self.coeffs) if c), 0j)

    def __eq__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a.coeffs == b.coeffs

    def __hash__(self):
        # Equal elements share the normalized trace whatever their conductor,
        # and for rationals it is the value itself.
        return hash(self.normalized_trace())

    def __bool__(self):
        return any(self.coeffs)

    def __str__(self):
        from .literals import format_cyclotomic
        return format_cyclotomic(self)

    def __repr__(self):
        return f"Cyclotomic({self.m}, {str(self)!r})"


def root_of_unity_order(a):
    """Smallest k > 0 with a^k = 1, or None if a is not a root of unity."""
    if not isinstance(a, Cyclotomic):
        a = Cyclotomic(1, [a])
    m = a.m if a.m % 2 == 0 else 2 * a.m
    a = a.lift(m)
    power = Cyclotomic(m, [1])
    for k in range(1, m + 1):
        power = power * a
        if power == 1:
            return k
    return None
