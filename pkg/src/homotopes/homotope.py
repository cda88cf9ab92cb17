"""Homotopes of finite-dimensional algebras.

An algebra is given by structure constants on a basis; elements are
coefficient vectors. The homotope of (A, Delta) is B = K*1 + A with
a . b = a Delta b on the augmentation ideal A.
"""
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import DomainError


def _F(v):
    return Fraction(v) if isinstance(v, int) else v


class FinDimAlgebra:
    """Associative unital algebra with sparse structure constants.

    ``table[(i, j)]`` is a dict k -> c with e_i e_j = sum c e_k.
    """

    def __init__(self, dim, table, unit, names=None, verify=True):
        self.dim = dim
        self.table = {key: {k: _F(c) for k, c in v.items() if c != 0}
                      for key, v in table.items()}
        self.unit = [_F(c) for c in unit]
        self.names = list(names) if names else [f"e{k}" for k in range(dim)]
        if len(self.unit) != dim:
            raise DomainError("unit vector has the wrong length")
        if verify:
            self.verify()

    def basis(self, k):
        v = [Fraction(0)] * self.dim
        v[k] = Fraction(1)
        return v

    def mul(self, u, v):
        out = [Fraction(0)] * self.dim
        nu = [(i, c) for i, c in enumerate(u) if c != 0]
        nv = [(j, c) for j, c in enumerate(v) if c != 0]
        for i, a in nu:
            for j, b in nv:
                prod = self.table.get((i, j))
                if prod:
                    ab = a * b
                    for k, c in prod.items():
                        out[k] = out[k] + ab * c
        return out

    def mul3(self, a, b, c):
        return self.mul(self.mul(a, b), c)

    def left_matrix(self, u):
        """Matrix of v -> u v (columns are images of basis vectors)."""
        return linalg.transpose([self.mul(u, self.basis(j)) for j in range(self.dim)])

    def right_matrix(self, u):
        return linalg.transpose([self.mul(self.basis(j), u) for j in range(self.dim)])

    def verify(self):
        d = self.dim
        for i in range(d):
            ei = self.basis(i)
            if self.mul(self.unit, ei) != ei or self.mul(ei, self.unit) != ei:
                raise DomainError(f"unit axiom fails on basis vector {self.names[i]}")
        for i in range(d):
            for j in range(d):
                ij = self.table.get((i, j))
                for k in range(d):
                    jk = self.table.get((j, k))
                    left = [Fraction(0)] * d
                    for m, c in (ij or {}).items():
                        for t, c2 in self.table.get((m, k), {}).items():
                            left[t] += c * c2
                    right = [Fraction(0)] * d
                    for m, c in (jk or {}).items():
                        for t, c2 in self.table.get((i, m), {}).items():
                            right[t] += c * c2
                    if left != right:
                        raise DomainError(f"structure constants not associative at "
                                          f"({self.names[i]}, {self.names[j]}, {self.names[k]})")

    def is_commutative(self):
        return all(self.table.get((i, j), {}) == self.table.get((j, i), {})
                   for i in range(self.dim) for j in range(i))

    def to_dict(self):
        from .scalars import format_scalar
        return {
            "dim": self.dim,
            "names": self.names,
            "unit": [format_scalar(c) for c in self.unit],
            "products": [[i, j, {str(k): format_scalar(c) for k, c in sorted(v.items())}]
                         for (i, j), v in sorted(self.table.items()) if v],
        }


def matrix_algebra(n):
    """Mat_n with basis E_ij at index i*n + j."""
    table = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                table[i * n + j, j * n + k] = {i * n + k: 1}
    unit = [1 if i == j else 0 for i in range(n) for j in range(n)]
    names = [f"E{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    return FinDimAlgebra(n * n, table, unit, names, verify=n <= 3)


def product_algebra(k):
    """K x ... x K (k factors): orthogonal idempotents."""
    table = {(i, i): {i: 1} for i in range(k)}
    return FinDimAlgebra(k, table, [1] * k, [f"f{i + 1}" for i in range(k)])


def matrix_to_vector(m):
    return [_F(c) for row in m for c in row]


def vector_to_matrix(v, n):
    return [list(v[i * n:(i + 1) * n]) for i in range(n)]


# -- homotopes -----------------------------------------------------------------

class Homotope:
    """B = K*1 + A with a . b = a Delta b; elements are pairs (lam, a)."""

    def __init__(self, base, delta):
        if len(delta) != base.dim:
            raise DomainError("Delta must be a vector in the base algebra")
        self.base = base
        self.delta = [_F(c) for c in delta]

    @property
    def dim(self):
        return self.base.dim + 1

    def product(self, a, b):
        """Homotope product on the augmentation ideal."""
        return self.base.mul3(a, self.delta, b)

    def mul(self, x, y):
        l1, a1 = x
        l2, a2 = y
        pr = self.product(a1, a2)
        return (l1 * l2, [l1 * q + l2 * p + r for p, q, r in zip(a1, a2, pr)])

    def one(self):
        return (Fraction(1), [Fraction(0)] * self.base.dim)

    def element(self, a, lam=0):
        return (_F(lam), [_F(c) for c in a])

    def psi1(self, x):
        lam, a = x
        ad = self.base.mul(a, self.delta)
        return [lam * u + v for u, v in zip(self.base.unit, ad)]

    def psi2(self, x):
        lam, a = x
        da = self.base.mul(self.delta, a)
        return [lam * u + v for u, v in zip(self.base.unit, da)]

    def structure_constants(self):
        """Table of B on the basis (1, e_0, ..., e_{d-1}) as index 0..d."""
        d = self.base.dim
        table = {(0, 0): {0: Fraction(1)}}
        for k in range(d):
            table[0, k + 1] = {k + 1: Fraction(1)}
            table[k + 1, 0] = {k + 1: Fraction(1)}
        for i in range(d):
            ed = self.base.mul(self.base.basis(i), self.delta)
            for j in range(d):
                prod = self.base.mul(ed, self.base.basis(j))
                nz = {k + 1: c for k, c in enumerate(prod) if c != 0}
                if nz:
                    table[i + 1, j + 1] = nz
        return table

    def as_algebra(self, verify=True):
        unit = [Fraction(1)] + [Fraction(0)] * self.base.dim
        return FinDimAlgebra(self.dim, self.structure_constants(), unit,
                             ["1"] + self.base.names, verify=verify)

    def split_idempotent(self):
        """For invertible Delta, the element Delta^-1 of the ideal is a central
        idempotent of B splitting B = A x K; None otherwise."""
        m = self.base
        R = m.right_matrix(self.delta)
        x = linalg.solve(R, m.unit)
        if x is None or m.mul(x, self.delta) != m.unit:
            return None
        return x


def build_homotope(a, delta):
    return Homotope(a, delta)


def products_span_rank(h):
    """dim span{u Delta v} over basis vectors u, v."""
    base = h.base
    ech = linalg.Echelon()
    for i in range(base.dim):
        ed = base.mul(base.basis(i), h.delta)
        for j in range(base.dim):
            v = base.mul(ed, base.basis(j))
            ech.add({k: c for k, c in enumerate(v) if c != 0})
            if ech.rank == base.dim:
                return ech.rank
    return ech.rank


def is_well_tempered_findim(h):
    """A Delta A = A (the multiplication B+ x B+ -> B+ is onto)."""
    return products_span_rank(h) == h.base.dim


@dataclass(frozen=True)
class QuiverClass:
    s: int
    t: int
    relations: str = "beta_j alpha_i = 0 for all i, j"

    def to_dict(self):
        return {"s": self.s, "t": self.t, "relations": self.relations}


def quiver_class(delta):
    """(dim ker, dim coker) of Delta given as a (possibly rectangular) matrix
    of rows, a RectangularDelta, or a Homotope over a matrix algebra."""
    if isinstance(delta, Homotope):
        n = int(round(h_dim_sqrt(delta.base.dim)))
        delta = vector_to_matrix(delta.delta, n)
    if isinstance(delta, RectangularDelta):
        delta = delta.matrix
    rows = len(delta)
    cols = len(delta[0]) if rows else 0
    r = linalg.rank(delta)
    if r == 0:
        raise DomainError("Delta = 0 is not well-tempered")
    return QuiverClass(cols - r, rows - r)


def h_dim_sqrt(d):
    n = int(d ** 0.5 + 0.5)
    if n * n != d:
        raise DomainError("base algebra is not a full matrix algebra")
    return n


def ext1_dim_check(h):
    """(dim Ext^1_B(K, B+), dim A / Delta A).

    The left side is the cokernel of Hom_B(B, B+) -> Hom_B(B+, B+) from the
    augmentation sequence 0 -> B+ -> B -> K -> 0: left B-module endomorphisms
    of B+ are the linear maps commuting with every a -> (u Delta) a, and the
    image consists of the maps a -> a Delta m.
    """
    base = h.base
    d = base.dim
    # basis of the left ideal A Delta, as left multiplication operators
    gens = []
    ech = linalg.Echelon()
    for i in range(d):
        ud = base.mul(base.basis(i), h.delta)
        if ech.add({k: c for k, c in enumerate(ud) if c != 0}):
            gens.append(base.left_matrix(ud))
    # unknown f is a d x d matrix, variable index r*d + c
    ech = linalg.Echelon()
    for L in gens:
        nzL = [[(k, L[r][k]) for k in range(d) if L[r][k] != 0] for r in range(d)]
        colL = [[(k, L[k][c]) for k in range(d) if L[k][c] != 0] for c in range(d)]
        for r in range(d):
            for c in range(d):
                # (f L)[r][c] - (L f)[r][c]
                row = {}
                for k, v in colL[c]:
                    key = r * d + k
                    row[key] = row.get(key, 0) + v
                for k, v in nzL[r]:
                    key = k * d + c
                    row[key] = row.get(key, 0) - v
                if any(v != 0 for v in row.values()):
                    ech.add(row)
    commutant = d * d - ech.rank
    # image of m -> (a -> a Delta m)
    images = []
    for j in range(d):
        dm = base.mul(h.delta, base.basis(j))
        images.append([x for row in base.right_matrix(dm) for x in row])
    image = linalg.rank_sparse({k: v for k, v in enumerate(img) if v != 0} for img in images)
    lhs = commutant - image
    delta_a = linalg.rank_sparse(
        {k: v for k, v in enumerate(base.mul(h.delta, base.basis(j))) if v != 0}
        for j in range(d))
    return lhs, d - delta_a


# -- rectangular (generalized) homotopes ------------------------------------------

class RectangularDelta:
    """Delta: N0 -> N1 as a d1 x d0 matrix; elements are pairs (lam, a) with
    a: N1 -> N0 a d0 x d1 matrix."""

    def __init__(self, matrix):
        self.matrix = [list(r) for r in matrix]
        self.d1 = len(self.matrix)
        self.d0 = len(self.matrix[0]) if self.matrix else 0
        if any(len(r) != self.d0 for r in self.matrix):
            raise DomainError("ragged Delta matrix")


def _mat_shape(a):
    return len(a), (len(a[0]) if a else 0)


def generalized_homotope_mul(x, y, delta):
    """(l1, a1)(l2, a2) = (l1 l2, l1 a2 + l2 a1 + a1 Delta a2)."""
    if not isinstance(delta, RectangularDelta):
        delta = RectangularDelta(delta)
    l1, a1 = x
    l2, a2 = y
    for a in (a1, a2):
        if _mat_shape(a) != (delta.d0, delta.d1):
            raise DomainError(f"element of shape {_mat_shape(a)} does not match "
                              f"Delta: {delta.d0} -> {delta.d1}")
    prod = linalg.matmul(linalg.matmul(a1, delta.matrix), a2)
    out = [[l1 * q + l2 * p + r for p, q, r in zip(ra, rb, rp)]
           for ra, rb, rp in zip(a1, a2, prod)]
    return (l1 * l2, out)


# -- representations ----------------------------------------------------------------

class Representation:
    """rho(e_k) for each basis vector of the algebra, verified eagerly."""

    def __init__(self, algebra, matrices, verify=True):
        self.algebra = algebra
        self.matrices = [[[_F(c) for c in r] for r in m] for m in matrices]
        if len(self.matrices) != algebra.dim:
            raise DomainError("need one matrix per basis vector")
        self.space_dim = len(self.matrices[0]) if self.matrices else 0
        if verify:
            self.verify()

    def act(self, u):
        n = self.space_dim
        out = [[Fraction(0)] * n for _ in range(n)]
        for k, c in enumerate(u):
            if c != 0:
                m = self.matrices[k]
                for i in range(n):
                    for j in range(n):
                        if m[i][j] != 0:
                            out[i][j] += c * m[i][j]
        return out

    def verify(self):
        a = self.algebra
        n = self.space_dim
        if self.act(a.unit) != linalg.identity(n):
            raise DomainError("representation does not send the unit to the identity")
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = linalg.matmul(self.matrices[i], self.matrices[j]) if n else []
                rhs = self.act(a.mul(a.basis(i), a.basis(j)))
                if n and not linalg.mat_eq(lhs, rhs):
                    raise DomainError(f"representation fails on {a.names[i]} * {a.names[j]}")


def standard_representation(n):
    """Mat_n acting on column vectors K^n."""
    mats = []
    for i in range(n):
        for j in range(n):
            mats.append([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)])
    return Representation(matrix_algebra(n), mats, verify=n <= 3)


def lambda_map(rep, delta):
    """rho(Delta): the natural map psi1* W -> psi2* W."""
    return rep.act([_F(c) for c in delta])


@dataclass
class ShadowModule:
    """B-module on Im rho(Delta): ``basis`` are column vectors of W spanning
    the image; ``action[k]`` is the matrix of basis vector e_k of the
    augmentation ideal, acting as rho(Delta e_k) restricted."""
    basis: list
    action: list

    @property
    def dim(self):
        return len(self.basis)


def minimal_shadow(rep, delta):
    L = lambda_map(rep, delta)
    if rep.space_dim == 0:
        return ShadowModule([], [[] for _ in range(rep.algebra.dim)])
    _, cols = linalg.column_space(L)
    a = rep.algebra
    action = []
    for k in range(a.dim):
        op = rep.act(a.mul(delta, a.basis(k)))
        action.append(linalg.restrict(op, cols))
    return ShadowModule(cols, action)


def trivial_sub_dim(module):
    """dim of {w : every element of the ideal acts by zero on w}."""
    if module.dim == 0:
        return 0
    rows = [r for m in module.action for r in m]
    return module.dim - linalg.rank(rows)


def trivial_quotient_dim(module):
    """dim W / (ideal . W)."""
    if module.dim == 0:
        return 0
    cols = [c for m in module.action for c in linalg.transpose(m)]
    return module.dim - linalg.rank(cols)


def rank_spaces(rho, graph=None):
    """Fixed spaces V_i = ker(rho(x_i) - 1) for a representation of B(Gamma)
    given as a list of matrices rho(x_i) in dense vertex order.

    When the graph is supplied the defining relations are verified first.
    """
    if graph is not None:
        verify_b_representation(graph, rho)
    out = []
    for m in rho:
        n = len(m)
        shifted = [[m[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
        out.append(linalg.nullspace(shifted, n) if n else [])
    return out


def verify_b_representation(g, rho):
    if len(rho) != g.n:
        raise DomainError("need one matrix per vertex")
    for i in range(g.n):
        if not linalg.mat_eq(linalg.matmul(rho[i], rho[i]), rho[i]):
            raise DomainError(f"rho(x_{g.vertices[i]}) is not idempotent")
        for j in range(g.n):
            if i == j:
                continue
            prod = linalg.matmul(rho[i], rho[j])
            if g.adjacent(i, j):
                lhs = linalg.matmul(prod, rho[i])
                if not linalg.mat_eq(lhs, linalg.mat_scale(rho[i], g.r(i, j))):
                    raise DomainError(f"x_i x_j x_i relation fails at "
                                      f"({g.vertices[i]}, {g.vertices[j]})")
            elif any(v != 0 for r in prod for v in r):
                raise DomainError(f"x_i x_j != 0 for non-adjacent "
                                  f"({g.vertices[i]}, {g.vertices[j]})")
