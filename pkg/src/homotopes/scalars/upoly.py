"""Dense univariate polynomials over Q (or any field), as coefficient lists.

Coefficients are stored low degree first, trailing zeros stripped; the zero
polynomial is the empty list. These helpers back the cyclotomic reduction,
the univariate Laurent gcd and the Smith normal form.
"""
from fractions import Fraction


def strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def add(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    return strip(out)


def neg(p):
    return [-c for c in p]


def sub(p, q):
    return add(p, neg(q))


def scale(p, c):
    if c == 0:
        return []
    return strip([a * c for a in p])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return strip(out)


def divmod_(p, q):
    """Euclidean division p = quo*q + rem with deg rem < deg q."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    lead = _field(q[-1])
    dq = len(q) - 1
    quo = [0] * max(len(p) - dq, 0)
    while len(rem) > dq and rem:
        c = rem[-1] / lead
        shift = len(rem) - 1 - dq
        quo[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
        rem.pop()
        rem = strip(rem)
    return strip(quo), rem


def _field(c):
    return Fraction(c) if isinstance(c, int) else c


def monic(p):
    if not p:
        return []
    lead = _field(p[-1])
    return [c / lead for c in p]


def gcd(p, q):
    p, q = strip(p), strip(q)
    while q:
        p, q = q, divmod_(p, q)[1]
    return monic(p)


def xgcd(p, q):
    """Return (g, a, b) with a*p + b*q = g and g monic."""
    r0, r1 = strip(p), strip(q)
    a0, a1 = [Fraction(1)], []
    b0, b1 = [], [Fraction(1)]
    while r1:
        quo, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        a0, a1 = a1, sub(a0, mul(quo, a1))
        b0, b1 = b1, sub(b0, mul(quo, b1))
    if not r0:
        return [], [], []
    inv = 1 / _field(r0[-1])
    return scale(r0, inv), scale(a0, inv), scale(b0, inv)


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def trailing_zeros(p):
    """Multiplicity of x as a factor of p (p nonzero)."""
    k = 0
    while k < len(p) and p[k] == 0:
        k += 1
    return k
