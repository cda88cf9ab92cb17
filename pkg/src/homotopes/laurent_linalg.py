"""Matrices over Laurent polynomial rings.

Determinants, Smith normal form over k[x, x^-1], coranks at points (rational
or quadratic irrational) and the stratification of characters of a cycle by
the corank of its Laplacian.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import DomainError
from .scalars import (LaurentPoly, format_scalar, laurent_gcd, parse_laurent, sqrt_of,
                      upoly)


def _lp(v):
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, str):
        return parse_laurent(v)
    return LaurentPoly.const(v)


class LaurentMatrix:
    """Rectangular matrix with LaurentPoly entries."""

    def __init__(self, rows):
        rows = [[_lp(v) for v in r] for r in rows]
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix rows")
        self.rows = rows

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r, c):
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def diag(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def shape(self):
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def variables(self):
        return tuple(sorted({v for r in self.rows for p in r for v in p.variables}))

    def univariate_var(self):
        vs = self.variables()
        if len(vs) > 1:
            raise DomainError(f"matrix is not univariate: variables {list(vs)}")
        return vs[0] if vs else None

    def transpose(self):
        return LaurentMatrix([list(c) for c in zip(*self.rows)])

    def __add__(self, other):
        return LaurentMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return LaurentMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __mul__(self, other):
        if not isinstance(other, LaurentMatrix):
            return LaurentMatrix([[a * other for a in r] for r in self.rows])
        r1, c1 = self.shape
        r2, c2 = other.shape
        if c1 != r2:
            raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = LaurentPoly()
                for a, b in zip(r, col):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out)

    def __eq__(self, other):
        return isinstance(other, LaurentMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def subs(self, mapping):
        return LaurentMatrix([[p.subs(mapping) for p in r] for r in self.rows])

    def evaluate(self, point):
        """Scalar matrix (list of rows) with every variable substituted."""
        return [[p.evaluate(point) if not p.is_constant() else p.constant_value() for p in r]
                for r in self.rows]

    def direct_sum(self, other):
        r1, c1 = self.shape
        r2, c2 = other.shape
        rows = [list(r) + [LaurentPoly()] * c2 for r in self.rows]
        rows += [[LaurentPoly()] * c1 + list(r) for r in other.rows]
        return LaurentMatrix(rows)

    def submatrix(self, rows, cols):
        return LaurentMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def to_strings(self):
        return [[format_scalar(p) for p in r] for r in self.rows]

    def to_dict(self):
        return {"variables": list(self.variables()), "rows": self.to_strings()}

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict) or "rows" not in data:
            raise ValueError("matrix description needs a 'rows' list")
        conductor = data.get("conductor")
        rows = [[parse_laurent(str(v), conductor=conductor) for v in r] for r in data["rows"]]
        m = cls(rows)
        declared = data.get("variables")
        if declared is not None:
            extra = set(m.variables()) - set(declared)
            if extra:
                raise ValueError(f"undeclared variables {sorted(extra)}")
        return m

    def __repr__(self):
        return f"LaurentMatrix({self.to_strings()})"


# -- determinant -----------------------------------------------------------

def _det_cofactor(rows):
    n = len(rows)
    memo = {}

    def minor(r, cols):
        # determinant of rows r.. with the given column tuple
        if r == n:
            return LaurentPoly.const(1)
        key = (r, cols)
        if key in memo:
            return memo[key]
        acc = LaurentPoly()
        for k, c in enumerate(cols):
            a = rows[r][c]
            if a:
                term = a * minor(r + 1, cols[:k] + cols[k + 1:])
                acc = acc + term if k % 2 == 0 else acc - term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def _det_bareiss(rows):
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = LaurentPoly.const(1)
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return LaurentPoly()
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divexact(prev)
            a[i][k] = LaurentPoly()
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def det(m):
    r, c = m.shape
    if r != c:
        raise DomainError(f"determinant of a non-square {r}x{c} matrix")
    if r == 0:
        return LaurentPoly.const(1)
    if r <= 6:
        return _det_cofactor(m.rows)
    return _det_bareiss(m.rows)


# -- Smith normal form -----------------------------------------------------

@dataclass
class SNFResult:
    factors: list
    U: LaurentMatrix
    V: LaurentMatrix
    var: str
    shape: tuple = field(default=(0, 0))

    def torsion(self):
        """Nontrivial invariant factors (non-units), zero factors excluded."""
        return [f for f in self.factors if f and not f.is_unit()]

    def free_rank(self):
        return sum(1 for f in self.factors if not f) + self.shape[0] - len(self.factors)

    def diagonal(self):
        r, c = self.shape
        return LaurentMatrix([[self.factors[i] if i == j and i < len(self.factors) else 0
                               for j in range(c)] for i in range(r)])


def _to_poly_rows(m, var):
    """Multiply each row by a power of var so all entries are polynomials.
    Returns (poly rows as upoly lists, shifts)."""
    rows, shifts = [], []
    for r in m.rows:
        lows = [p.to_upoly(var)[0] for p in r if p]
        shift = -min(lows) if lows else 0
        shifts.append(shift)
        row = []
        for p in r:
            if not p:
                row.append([])
                continue
            lo, coeffs = p.to_upoly(var)
            row.append([Fraction(0)] * (lo + shift) + list(coeffs))
        rows.append(row)
    return rows, shifts


def _row_op(mat, dst, src, q):
    """row dst -= q * row src (q an upoly)."""
    mat[dst] = [upoly.sub(a, upoly.mul(q, b)) for a, b in zip(mat[dst], mat[src])]


def _col_op(mat, dst, src, q):
    for row in mat:
        row[dst] = upoly.sub(row[dst], upoly.mul(q, row[src]))


def _swap_cols(mat, i, j):
    for row in mat:
        row[i], row[j] = row[j], row[i]


def _poly_snf(a):
    """Smith form over Q[x]. Returns (diag entries, U, V) with U a V = D."""
    r = len(a)
    c = len(a[0]) if a else 0
    a = [list(map(list, row)) for row in a]
    U = [[[Fraction(1)] if i == j else [] for j in range(r)] for i in range(r)]
    V = [[[Fraction(1)] if i == j else [] for j in range(c)] for i in range(c)]
    for t in range(min(r, c)):
        while True:
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    if a[i][j] and (best is None or len(a[i][j]) < len(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            i, j = best
            if i != t:
                a[t], a[i] = a[i], a[t]
                U[t], U[i] = U[i], U[t]
            if j != t:
                _swap_cols(a, t, j)
                _swap_cols(V, t, j)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, r):
                if a[i][t]:
                    q, rem = upoly.divmod_(a[i][t], p)
                    _row_op(a, i, t, q)
                    _row_op(U, i, t, q)
                    dirty = dirty or bool(rem)
            for j in range(t + 1, c):
                if a[t][j]:
                    q, rem = upoly.divmod_(a[t][j], p)
                    _col_op(a, j, t, q)
                    _col_op(V, j, t, q)
                    dirty = dirty or bool(rem)
            if dirty:
                continue
            bad = None
            for i in range(t + 1, r):
                for j in range(t + 1, c):
                    if a[i][j] and upoly.divmod_(a[i][j], p)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            # pull the offending row into row t and redo
            a[t] = [upoly.add(x, y) for x, y in zip(a[t], a[bad])]
            U[t] = [upoly.add(x, y) for x, y in zip(U[t], U[bad])]
    diag = [a[t][t] for t in range(min(r, c))]
    return diag, U, V


def smith_normal_form(m):
    """Invariant factors d_1 | d_2 | ... of a univariate Laurent matrix, with
    unimodular U, V such that U m V = diag(d). Factors are canonical
    associates (monic polynomials with nonzero constant term) or zero."""
    var = m.univariate_var() or "x"
    r, c = m.shape
    prow, shifts = _to_poly_rows(m, var)
    diag, U, V = _poly_snf(prow)

    def to_lp(p, shift=0):
        return LaurentPoly.from_upoly(p, var, shift)

    Ul = [[to_lp(U[i][j], shifts[j]) for j in range(r)] for i in range(r)]
    Vl = [[to_lp(V[i][j]) for j in range(c)] for i in range(c)]
    factors = []
    for t, d in enumerate(diag):
        if not d:
            factors.append(LaurentPoly())
            continue
        p = to_lp(d)
        canon = p.canonical_associate(var)
        unit = p.divexact(canon)
        uinv = unit.inv()
        Ul[t] = [e * uinv for e in Ul[t]]
        factors.append(canon)
    return SNFResult(factors, LaurentMatrix(Ul), LaurentMatrix(Vl), var, (r, c))


def cokernel_iso(a, b):
    """Same cokernel up to isomorphism: equal torsion multisets and free ranks."""
    key = lambda res: sorted(str(f) for f in res.torsion())
    return key(a) == key(b) and a.free_rank() == b.free_rank()


# -- coranks -----------------------------------------------------------------

def determinantal_divisors(m):
    """d_k = gcd of all k x k minors (canonical associates), by brute force.

    Exponential; used as an independent oracle for small matrices.
    """
    r, c = m.shape
    out = []
    for k in range(1, min(r, c) + 1):
        g = LaurentPoly()
        for rows in combinations(range(r), k):
            for cols in combinations(range(c), k):
                g = laurent_gcd(g, det(m.submatrix(rows, cols)))
        out.append(g)
    return out


def corank_at(m, x0):
    """Corank (columns minus rank) of m evaluated at x0 != 0.

    x0 may be a rational, a QuadraticNumber (a root of a rational quadratic)
    or a Cyclotomic. The rank at x0 is the number of invariant factors not
    vanishing at x0, i.e. the largest k with d_k(x0) != 0.
    """
    if x0 == 0:
        raise DomainError("evaluation point must be nonzero")
    var = m.univariate_var()
    r, c = m.shape
    if var is None:
        return c - linalg.rank(m.evaluate({}))
    res = smith_normal_form(m)
    rank = sum(1 for f in res.factors if f and f.evaluate({var: x0}) != 0)
    return c - rank


def corank_evaluated(m, x0):
    """Same quantity computed by evaluating first (rational points only)."""
    var = m.univariate_var()
    point = {var: x0} if var else {}
    return m.shape[1] - linalg.rank(m.evaluate(point))


# -- cyclic graph strata -----------------------------------------------------

def cyclic_laplacian(n, s, var="x"):
    """Matrix of the Laplacian of C_n in the gauge where only the edge n-1
    carries the loop variable: 1 on the diagonal, s_{i,i+1} off it, and
    s_{n1} x^-1 at (1, n), s_{n1} x at (n, 1). s lists s_12, ..., s_n1."""
    if n < 3:
        raise DomainError("cyclic Laplacian needs n >= 3")
    if len(s) != n:
        raise DomainError(f"expected {n} edge parameters, got {len(s)}")
    x = LaurentPoly.var(var)
    rows = [[LaurentPoly.const(1) if i == j else LaurentPoly() for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        rows[i][i + 1] = _lp(s[i])
        rows[i + 1][i] = _lp(s[i])
    rows[0][n - 1] = _lp(s[n - 1]) * x.inv()
    rows[n - 1][0] = _lp(s[n - 1]) * x
    return LaurentMatrix(rows)


@dataclass
class StrataReport:
    n: int
    A: object
    B: object
    discriminant: object
    roots: list
    coranks: list
    strata_dims: list
    det: LaurentPoly

    def to_dict(self):
        return {
            "n": self.n,
            "A": format_scalar(self.A),
            "B": format_scalar(self.B),
            "det": str(self.det),
            "discriminant": format_scalar(self.discriminant),
            "roots": [format_scalar(r) for r in self.roots],
            "coranks": list(self.coranks),
            "strata_dims": list(self.strata_dims),
        }


def cyclic_strata(n, s, var="x"):
    m = cyclic_laplacian(n, s, var)
    d = det(m)
    x = LaurentPoly.var(var)
    A = d.coefficient({var: 1})
    if d.coefficient({var: -1}) != A:
        raise DomainError(f"determinant {d} is not of the form A(x + 1/x) + B")
    B_poly = d - A * (x + x.inv())
    if not B_poly.is_constant():
        raise DomainError(f"determinant {d} is not of the form A(x + 1/x) + B")
    B = B_poly.constant_value()
    prod = Fraction(1)
    for v in s:
        prod = prod * v
    if A != prod and A != -prod:
        raise DomainError(f"leading coefficient {A} is not +-{prod}")
    D = B * B - 4 * A * A
    roots = []
    if D == 0:
        roots = [-B / (2 * A)]
    else:
        try:
            rt = sqrt_of(D)
        except (TypeError, ValueError):
            rt = None
        if rt is not None:
            roots = [(-B + rt) / (2 * A), (-B - rt) / (2 * A)]
    coranks = [corank_at(m, r) for r in roots]
    for k in coranks:
        if k > 2:
            raise DomainError(f"corank {k} exceeds 2; the (n-2)-minor argument is violated")
    dims = sorted({n} | {n - k for k in coranks}, reverse=True)
    return StrataReport(n, A, B, D, roots, coranks, dims, d)
