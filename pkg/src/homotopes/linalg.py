"""Exact dense/sparse linear algebra over fields of exact scalars.

Matrices are lists of rows. Elimination runs on sparse rows (dict column ->
entry) so the large, mostly-zero systems built for commutants and filtered
multiplication maps stay cheap. Purely rational matrices are routed to the
fraction-free integer rank kernel.
"""
from fractions import Fraction

from . import kernels


def zeros(rows, cols):
    return [[Fraction(0)] * cols for _ in range(rows)]


def identity(n, one=Fraction(1)):
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def shape(m):
    return len(m), (len(m[0]) if m else 0)


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    if not a or not b:
        return [[] for _ in a]
    if len(a[0]) != len(b):
        raise ValueError(f"shape mismatch {shape(a)} x {shape(b)}")
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(k, v) for k, v in enumerate(row) if v != 0]
        out_row = []
        for col in bt:
            acc = 0
            for k, v in nz:
                w = col[k]
                if w != 0:
                    acc = acc + v * w
            out_row.append(acc if not isinstance(acc, int) else Fraction(acc))
        out.append(out_row)
    return out


def matvec(a, v):
    return [sum((x * y for x, y in zip(row, v) if x != 0 and y != 0), Fraction(0)) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in r] for r in a]


def mat_eq(a, b):
    return shape(a) == shape(b) and all(x == y for r, s in zip(a, b) for x, y in zip(r, s))


def direct_sum(a, b, zero=Fraction(0)):
    ra, ca = shape(a)
    rb, cb = shape(b)
    out = [list(r) + [zero] * cb for r in a]
    out += [[zero] * ca + list(r) for r in b]
    return out


def _field(x):
    return Fraction(x) if isinstance(x, int) else x


class Echelon:
    """Incrementally built row echelon form.

    Pivot rows are normalized (pivot entry 1) and stored by pivot column.
    """

    def __init__(self):
        self.pivots = {}

    def reduce(self, row):
        row = {c: _field(v) for c, v in row.items() if v != 0}
        while row:
            done = True
            for c in sorted(row):
                p = self.pivots.get(c)
                if p is None:
                    continue
                f = row[c]
                for k, v in p.items():
                    w = row.get(k, 0) - f * v
                    if w == 0:
                        row.pop(k, None)
                    else:
                        row[k] = w
                done = False
                break
            if done:
                break
        return row

    def add(self, row):
        """Insert a row; return True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        c = min(row)
        lead = row[c]
        self.pivots[c] = {k: v / lead for k, v in row.items()}
        return True

    @property
    def rank(self):
        return len(self.pivots)

    def reduced(self):
        """Fully reduced pivot rows, as {pivot: row}."""
        cols = sorted(self.pivots, reverse=True)
        out = {}
        for c in cols:
            row = dict(self.pivots[c])
            for k in sorted(row):
                if k != c and k in out:
                    f = row[k]
                    for j, v in out[k].items():
                        w = row.get(j, 0) - f * v
                        if w == 0:
                            row.pop(j, None)
                        else:
                            row[j] = w
            out[c] = row
        return out


def _sparse_rows(m):
    return [{j: v for j, v in enumerate(r) if v != 0} for r in m]


def _is_rational(m):
    return all(isinstance(v, (int, Fraction)) for r in m for v in r)


def rank(m):
    if not m or not m[0]:
        return 0
    if _is_rational(m) and len(m) * len(m[0]) <= 40000:
        return kernels.int_rank(_clear_denominators(m))
    ech = Echelon()
    for r in _sparse_rows(m):
        ech.add(r)
    return ech.rank


def rank_sparse(rows):
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def _clear_denominators(m):
    out = []
    for r in m:
        den = 1
        for v in r:
            if isinstance(v, Fraction) and v.denominator != 1:
                den = den * v.denominator // _gcd(den, v.denominator)
        out.append([int(v * den) for v in r])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def nullspace_sparse(rows, ncols):
    """Basis of {v : row . v = 0 for all rows}, as dense lists."""
    ech = Echelon()
    for r in rows:
        ech.add(r)
    red = ech.reduced()
    free = [j for j in range(ncols) if j not in red]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for c, row in red.items():
            if f in row:
                v[c] = -row[f]
        basis.append(v)
    return basis


def nullspace(m, ncols=None):
    if ncols is None:
        ncols = len(m[0]) if m else 0
    return nullspace_sparse(_sparse_rows(m), ncols)


def column_space(m):
    """Indices of pivot columns and the corresponding columns (a basis of the image)."""
    if not m:
        return [], []
    ech = Echelon()
    t = transpose(m)
    pivots = []
    for j, col in enumerate(t):
        if ech.add({i: v for i, v in enumerate(col) if v != 0}):
            pivots.append(j)
    return pivots, [t[j] for j in pivots]


def row_basis(vectors):
    """Linearly independent subset (indices) of the given vectors."""
    ech = Echelon()
    keep = []
    for k, v in enumerate(vectors):
        if ech.add({i: x for i, x in enumerate(v) if x != 0}):
            keep.append(k)
    return keep


def solve(a, b):
    """One solution x of a x = b (b a column list), or None if inconsistent."""
    n = len(a[0]) if a else 0
    ech = Echelon()
    for r, rhs in zip(a, b):
        row = {j: v for j, v in enumerate(r) if v != 0}
        if rhs != 0:
            row[n] = rhs
        ech.add(row)
    red = ech.reduced()
    if n in red:
        return None
    x = [Fraction(0)] * n
    for c, row in red.items():
        x[c] = row.get(n, Fraction(0))
    return x


def det(m):
    """Determinant over a field by Gaussian elimination."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    a = [[_field(v) for v in r] for r in m]
    result = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            result = -result
        result = result * a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f != 0:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return result


def inverse(m):
    n = len(m)
    ech = Echelon()
    for i, r in enumerate(m):
        row = {j: v for j, v in enumerate(r) if v != 0}
        row[n + i] = Fraction(1)
        ech.add(row)
    red = ech.reduced()
    if any(c not in red for c in range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [[red[i].get(n + j, Fraction(0)) for j in range(n)] for i in range(n)]


def restrict(op, basis_cols):
    """Matrix of op on the invariant subspace spanned by basis_cols
    (a list of column vectors); raises ValueError if not invariant."""
    k = len(basis_cols)
    if k == 0:
        return []
    b = transpose(basis_cols)
    images = transpose(matmul(op, b))
    out_cols = []
    for img in images:
        x = solve(b, img)
        if x is None:
            raise ValueError("subspace is not invariant")
        out_cols.append(x)
    return transpose(out_cols)
