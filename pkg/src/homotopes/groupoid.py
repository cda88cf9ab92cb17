"""The groupoid algebra of a graph: reduced paths, Laplacian, matrix model."""
import random
import warnings
from fractions import Fraction

from . import kernels, linalg
from .errors import DomainError, PreconditionWarning
from .graph import GraphError, cycle_basis, has_tail
from .laurent_linalg import LaurentMatrix
from .scalars import LaurentPoly, format_scalar


def reduce_path(g, path):
    """Free reduction of a dense path (stays and backtracks removed)."""
    if not path:
        raise GraphError("the groupoid has no empty path")
    return kernels.contract(tuple(path), g.n, g.edge_index)[0]


def _concat(g, a, b):
    if a[-1] != b[0]:
        return None
    return kernels.contract(a + b[1:], g.n, g.edge_index)[0]


class GroupoidElement:
    """Finite combination of reduced dense paths; trivial paths (i,) are e_i."""

    __slots__ = ("graph", "terms")

    def __init__(self, graph, terms=None):
        self.graph = graph
        clean = {}
        for p, c in (terms or {}).items():
            if c != 0:
                p = tuple(p)
                if p in clean:
                    c = clean[p] + c
                    if c == 0:
                        del clean[p]
                        continue
                clean[p] = c
        self.terms = clean

    @classmethod
    def _raw(cls, graph, terms):
        obj = cls.__new__(cls)
        obj.graph = graph
        obj.terms = terms
        return obj

    def _check(self, other):
        if not isinstance(other, GroupoidElement):
            return False
        if other.graph is not self.graph and other.graph != self.graph:
            raise DomainError("groupoid elements over different graphs")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        out = dict(self.terms)
        for p, c in other.terms.items():
            v = out.get(p, 0) + c
            if v == 0:
                out.pop(p, None)
            else:
                out[p] = v
        return GroupoidElement._raw(self.graph, out)

    def __neg__(self):
        return GroupoidElement._raw(self.graph, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return GroupoidElement(self.graph)
        return GroupoidElement._raw(self.graph, {p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, GroupoidElement):
            return groupoid_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, GroupoidElement):
            return NotImplemented
        return self.graph == other.graph and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def is_zero(self):
        return not self.terms

    def coefficient(self, path):
        return self.terms.get(tuple(path), 0)

    def max_length(self):
        return max((len(p) - 1 for p in self.terms), default=-1)

    def by_end(self):
        out = {}
        for p, c in self.terms.items():
            out.setdefault(p[-1], []).append((p, c))
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for p in sorted(self.terms, key=lambda p: (len(p), p)):
            ids = ",".join(str(v) for v in self.graph.ids(p))
            parts.append(f"{format_scalar(self.terms[p])} * [{ids}]")
        return " + ".join(parts)

    __repr__ = __str__


def groupoid_mul(a, b):
    if not a._check(b):
        raise TypeError("groupoid_mul needs two groupoid elements")
    g = a.graph
    out = {}
    right = b.terms
    if not right or not a.terms:
        return GroupoidElement(g)
    starts = {}
    for q, d in right.items():
        starts.setdefault(q[0], []).append((q, d))
    for p, c in a.terms.items():
        for q, d in starts.get(p[-1], ()):
            r = kernels.contract(p + q[1:], g.n, g.edge_index)[0]
            v = out.get(r, 0) + c * d
            if v == 0:
                out.pop(r, None)
            else:
                out[r] = v
    return GroupoidElement._raw(g, out)


def unit(g):
    return GroupoidElement(g, {(i,): Fraction(1) for i in range(g.n)})


def e(g, i):
    """Trivial path at the vertex with identifier i."""
    return GroupoidElement(g, {(g.index[i],): Fraction(1)})


def l(g, *path):
    """Basis element l_gamma for a path given by vertex identifiers."""
    p = g.dense(path)
    if not g.is_valid_dense(p):
        raise GraphError(f"invalid path {path}")
    return GroupoidElement(g, {reduce_path(g, p): Fraction(1)})


def laplacian(g):
    """Delta = sum_i e_i + sum over oriented edges s_ij l_ij."""
    terms = {(i,): Fraction(1) for i in range(g.n)}
    for k, (i, j) in enumerate(g.edges):
        terms[i, j] = g.params[k]
        terms[j, i] = g.params[k]
    return GroupoidElement(g, terms)


def sigma(z):
    """Anti-involution l_gamma -> l_(reversed gamma)."""
    return GroupoidElement._raw(z.graph, {p[::-1]: c for p, c in z.terms.items()})


def reduced_paths(g, max_len):
    """Nonempty reduced dense paths of edge length <= max_len."""
    from .graph import enumerate_contracted_dense
    return enumerate_contracted_dense(g, max_len)[1:]


# -- matrix model --------------------------------------------------------------

def path_matrix_entry(basis, path):
    """(row, col, Laurent monomial) representing l_path."""
    w = basis.winding(path)
    names = basis.variables()
    mono = LaurentPoly.const(1)
    for name, k in zip(names, w):
        if k:
            mono = mono * LaurentPoly.var(name, k)
    return path[0], path[-1], mono


def to_matrix(z, basis=None):
    """Image of z in Mat_n over the Laurent ring of the cycle basis.

    Tree edges map to matrix units; each traversal of the oriented non-tree
    edge u -> v (u < v) contributes its variable, the reverse its inverse.
    """
    g = z.graph
    if not g.is_connected():
        raise DomainError("to_matrix needs a connected graph")
    if basis is None:
        basis = cycle_basis(g)
    rows = [[LaurentPoly() for _ in range(g.n)] for _ in range(g.n)]
    for p, c in z.terms.items():
        i, j, mono = path_matrix_entry(basis, p)
        rows[i][j] = rows[i][j] + mono * c
    return LaurentMatrix(rows)


# -- filtered injectivity ------------------------------------------------------

def specialize(g, seed=0):
    """Graph with every symbolic parameter replaced by a random nonzero
    rational (seeded); concrete graphs are returned unchanged."""
    if not g.is_symbolic():
        return g
    rng = random.Random(seed)
    point = {}
    for p in g.params:
        if isinstance(p, LaurentPoly):
            for v in p.variables:
                if v not in point:
                    point[v] = Fraction(rng.choice([-1, 1]) * rng.randint(1, 97), rng.randint(1, 97))
    values = [p.evaluate(point) if isinstance(p, LaurentPoly) else p for p in g.params]
    return g.with_params(values)


def filtered_rank(elements):
    """Rank of a family of groupoid elements over their common path support."""
    cols = {}
    rows = []
    for z in elements:
        row = {}
        for p, c in z.terms.items():
            k = cols.setdefault(p, len(cols))
            row[k] = c
        rows.append(row)
    return linalg.rank_sparse(rows)


def delta_no_zero_divisor_filtered(g, max_len, seed=0):
    """Injectivity of z -> z Delta and z -> Delta z on reduced paths of
    length <= max_len. Symbolic parameters are specialized at seeded random
    rationals; a tail triggers a PreconditionWarning."""
    if not g.is_connected():
        raise DomainError("the zero-divisor check needs a connected graph")
    if has_tail(g):
        warnings.warn("graph has a tail; Delta may be a zero divisor", PreconditionWarning, stacklevel=2)
    g = specialize(g, seed)
    delta = laplacian(g)
    basis = [GroupoidElement._raw(g, {p: Fraction(1)}) for p in reduced_paths(g, max_len)]
    right = filtered_rank([groupoid_mul(b, delta) for b in basis])
    left = filtered_rank([groupoid_mul(delta, b) for b in basis])
    return right == len(basis) and left == len(basis)
