"""Elements a + b*sqrt(D) of a quadratic field Q(sqrt(D))."""
from fractions import Fraction
from math import isqrt


def squarefree_part(n):
    """Split a nonzero integer as n = k^2 * d with d squarefree; return (k, d)."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    sign = -1 if n < 0 else 1
    n = abs(n)
    k, d, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1
    return k, sign * d * n


def rational_sqrt(q):
    """Exact square root of a nonnegative rational, or None."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def sqrt_of(q):
    """sqrt(q) for a rational q, as a Fraction when rational else a QuadraticNumber."""
    q = Fraction(q)
    r = rational_sqrt(q)
    if r is not None:
        return r
    # q = num/den = num*den / den^2
    k, d = squarefree_part(q.numerator * q.denominator)
    return QuadraticNumber(0, Fraction(k, q.denominator), d)


class QuadraticNumber:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        if d == 1 or d == 0:
            raise ValueError("radicand must be a squarefree integer other than 0, 1")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise ValueError(f"mixing Q(sqrt({self.d})) and Q(sqrt({other.d}))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadraticNumber(self.a * o.a + self.d * self.b * o.b,
                               self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conj(self):
        return QuadraticNumber(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    def inv(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadraticNumber(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k):
        base = self if k >= 0 else self.inv()
        result = QuadraticNumber(1, 0, self.d)
        for _ in range(abs(k)):
            result = result * base
        return result

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber) and other.d != self.d:
            return False
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __str__(self):
        root = f"sqrt({self.d})" if abs(self.b) == 1 else f"{abs(self.b)}*sqrt({self.d})"
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return ("-" if self.b < 0 else "") + root
        sign = "-" if self.b < 0 else "+"
        return f"{self.a} {sign} {root}"

    __repr__ = __str__
