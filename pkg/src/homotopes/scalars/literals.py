"""Text literals for exact scalars.

Grammar (whitespace ignored)::

    expr   := [+|-] term ((+|-) term)*
    term   := factor ((*|/) factor)*
    factor := base [^ [-] INT | ^ ( [-] INT )]
    base   := INT | NAME | sqrt ( [-] INT ) | ( expr )

Rationals print as ``p/q``; Laurent terms as ``c*x1^a1*x2^a2``; cyclotomic
elements as polynomials in ``z`` whose conductor is declared out of band.
"""
import re
from fractions import Fraction

from .cyclotomic import Cyclotomic
from .laurent import LaurentPoly
from .quadratic import QuadraticNumber, sqrt_of

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class LiteralError(ValueError):
    pass


def _tokenize(text):
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif name is not None:
            tokens.append(("name", name))
        elif op.strip():
            if op not in "+-*/^()":
                raise LiteralError(f"unexpected character {op!r} in {text!r}")
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text, conductor, cyclotomic_symbol):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0
        self.conductor = conductor
        self.zsym = cyclotomic_symbol

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise LiteralError(f"malformed literal {self.text!r} near token {self.i}")
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise LiteralError("empty literal")
        val = self.expr()
        if self.i != len(self.tokens):
            raise LiteralError(f"trailing input in literal {self.text!r}")
        return val

    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        val = self.term()
        if sign < 0:
            val = -val
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self):
        val = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.factor()
            if op == "*":
                val = val * rhs
            else:
                if rhs == 0:
                    raise LiteralError(f"division by zero in {self.text!r}")
                val = val / rhs
        return val

    def _exponent(self):
        paren = self.peek() == ("op", "(")
        if paren:
            self.take()
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        k = sign * self.take("num")[1]
        if paren:
            self.take("op", ")")
        return k

    def factor(self):
        base = self.base()
        if self.peek() == ("op", "^"):
            self.take()
            base = base ** self._exponent()
        return base

    def base(self):
        kind, value = self.peek()
        if kind == "num":
            self.take()
            return Fraction(value)
        if kind == "name":
            self.take()
            if value == "sqrt" and self.peek() == ("op", "("):
                self.take()
                sign = 1
                if self.peek() == ("op", "-"):
                    self.take()
                    sign = -1
                k = sign * self.take("num")[1]
                self.take("op", ")")
                return sqrt_of(k)
            if value == self.zsym and self.conductor is not None:
                return Cyclotomic.zeta(self.conductor)
            return LaurentPoly.var(value)
        if (kind, value) == ("op", "("):
            self.take()
            val = self.expr()
            self.take("op", ")")
            return val
        raise LiteralError(f"malformed literal {self.text!r}")


def _simplify(val):
    if isinstance(val, LaurentPoly) and val.is_constant():
        return val.constant_value()
    return val


def parse_scalar(text, conductor=None, cyclotomic_symbol="z"):
    """Parse a rational, cyclotomic (when conductor is given) or Laurent literal."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    val = _simplify(_Parser(str(text), conductor, cyclotomic_symbol).parse())
    if conductor is not None and isinstance(val, Fraction):
        return Cyclotomic(conductor, [val])
    return val


def parse_rational(text):
    val = parse_scalar(text)
    if not isinstance(val, Fraction):
        raise LiteralError(f"{text!r} is not a rational literal")
    return val


def parse_laurent(text, conductor=None):
    val = _Parser(str(text), conductor, "z").parse()
    if isinstance(val, LaurentPoly):
        return val
    return LaurentPoly.const(val)


def parse_cyclotomic(text, conductor):
    val = parse_scalar(text, conductor=conductor)
    if isinstance(val, LaurentPoly):
        raise LiteralError(f"{text!r} has free variables {val.variables}")
    if isinstance(val, Fraction):
        return Cyclotomic(conductor, [val])
    return val.lift(conductor) if conductor % val.m == 0 else val


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _join_terms(pieces):
    """pieces: list of (negative?, body) -> 'a + b - c'."""
    if not pieces:
        return "0"
    out = ""
    for k, (negative, body) in enumerate(pieces):
        if k == 0:
            out = ("-" if negative else "") + body
        else:
            out += (" - " if negative else " + ") + body
    return out


def format_cyclotomic(c, symbol="z"):
    pieces = []
    for k, q in sorted(c.terms().items()):
        mono = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
        mag = format_rational(abs(q))
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        pieces.append((q < 0, body))
    return _join_terms(pieces)


def _format_coefficient(c):
    """Return (negative?, text-or-None for unit magnitude)."""
    if isinstance(c, Cyclotomic):
        if c.is_rational():
            c = c.to_fraction()
        else:
            return False, f"({format_cyclotomic(c)})"
    if isinstance(c, QuadraticNumber):
        return False, f"({c})"
    c = Fraction(c)
    mag = abs(c)
    return c < 0, (None if mag == 1 else format_rational(mag))


def format_laurent(p):
    variables = p.variables

    def order(item):
        d = dict(item[0])
        return tuple(-d.get(v, 0) for v in variables)

    pieces = []
    for mono, c in sorted(p.terms.items(), key=order):
        negative, coef = _format_coefficient(c)
        factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
        if not factors:
            body = coef if coef is not None else "1"
        elif coef is None:
            body = "*".join(factors)
        else:
            body = "*".join([coef] + factors)
        pieces.append((negative, body))
    return _join_terms(pieces)


def format_scalar(x):
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Fraction)):
        return format_rational(x)
    if isinstance(x, Cyclotomic):
        return format_cyclotomic(x)
    if isinstance(x, LaurentPoly):
        return format_laurent(x)
    if isinstance(x, complex):
        return repr(x)
    return str(x)
