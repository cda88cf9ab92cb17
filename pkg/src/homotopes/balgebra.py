"""The algebra B(Gamma) in the basis of contracted paths.

Generators x_i satisfy x_i^2 = x_i, x_i x_j x_i = s_ij^2 x_i on edges and
x_i x_j = 0 off edges. A contracted dense path gamma stands for
x_gamma = x_{i0} ... x_{it}; the empty path is the unit.
"""
import warnings
from fractions import Fraction

from . import kernels, linalg
from .errors import DomainError, PreconditionWarning
from .graph import contract_dense, enumerate_contracted_dense, has_tail
from .groupoid import GroupoidElement, groupoid_mul, laplacian, specialize, unit
from .scalars import format_scalar


def _coefficient(g, popped):
    c = Fraction(1)
    for k in popped:
        c = c * g.params[k] ** 2
    return c


def mul_basis(g, a, b):
    """x_a x_b as (contracted path, coefficient), or None when zero."""
    if not a:
        return b, Fraction(1)
    if not b:
        return a, Fraction(1)
    i, j = a[-1], b[0]
    if i != j and (i, j) not in g.edge_id:
        return None
    path, popped = kernels.contract(a + b, g.n, g.edge_index)
    return path, _coefficient(g, popped)


class BElement:
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
        if not isinstance(other, BElement):
            return False
        if other.graph is not self.graph and other.graph != self.graph:
            raise DomainError("B elements over different graphs")
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
        return BElement._raw(self.graph, out)

    def __neg__(self):
        return BElement._raw(self.graph, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return BElement(self.graph)
        return BElement._raw(self.graph, {p: c * v for p, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, BElement):
            return b_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, BElement):
            return NotImplemented
        return self.graph == other.graph and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def is_zero(self):
        return not self.terms

    def coefficient(self, path):
        return self.terms.get(tuple(path), 0)

    def augmentation(self):
        return self.terms.get((), Fraction(0))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for p in sorted(self.terms, key=lambda p: (len(p), p)):
            ids = ",".join(str(v) for v in self.graph.ids(p))
            parts.append(f"{format_scalar(self.terms[p])} * x[{ids}]")
        return " + ".join(parts)

    __repr__ = __str__


def b_mul(a, b):
    if not a._check(b):
        raise TypeError("b_mul needs two B elements")
    g = a.graph
    out = {}
    for p, c in a.terms.items():
        for q, d in b.terms.items():
            r = mul_basis(g, p, q)
            if r is None:
                continue
            path, coef = r
            v = out.get(path, 0) + c * d * coef
            if v == 0:
                out.pop(path, None)
            else:
                out[path] = v
    return BElement._raw(g, out)


def one(g):
    return BElement(g, {(): Fraction(1)})


def x(g, *path):
    """x_gamma for a path given by vertex identifiers (contracted on the way)."""
    p = g.dense(path)
    if not p:
        return one(g)
    q, exps = contract_dense(g, p)
    c = Fraction(1)
    for k, e in exps.items():
        c = c * g.params[k] ** (2 * e)
    return BElement(g, {q: c})


def basis_element(g, dense_path):
    return BElement._raw(g, {tuple(dense_path): Fraction(1)})


def sigma_b(b):
    """Anti-automorphism fixing every generator: x_gamma -> x_(reversed gamma)."""
    return BElement._raw(b.graph, {p[::-1]: c for p, c in b.terms.items()})


# -- psi maps into the groupoid algebra ----------------------------------------

def psi_generator(g, which, i):
    """psi_1(x_i) = e_i + sum_j s_ij l_ij ; psi_2(x_i) = e_i + sum_j s_ji l_ji."""
    terms = {(i,): Fraction(1)}
    for j in g.neighbors[i]:
        if which == 1:
            terms[i, j] = g.s(i, j)
        elif which == 2:
            terms[j, i] = g.s(j, i)
        else:
            raise DomainError(f"psi index must be 1 or 2, got {which}")
    return GroupoidElement(g, terms)


def psi_path(g, which, path, _cache=None):
    if not path:
        return unit(g)
    gens = [psi_generator(g, which, i) for i in range(g.n)] if _cache is None else _cache
    out = gens[path[0]]
    for i in path[1:]:
        out = groupoid_mul(out, gens[i])
    return out


def psi(which, b):
    g = b.graph
    gens = [psi_generator(g, which, i) for i in range(g.n)]
    out = GroupoidElement(g)
    for p, c in b.terms.items():
        out = out + psi_path(g, which, p, gens).scale(c)
    return out


def phi_basis(g, path):
    """Image of x_gamma (gamma nonempty) under the non-unital isomorphism onto
    the homotope of the groupoid algebra: (prod of s along gamma) l_gamma."""
    c = Fraction(1)
    for a, b in zip(path, path[1:]):
        c = c * g.s(a, b)
    return c


def phi(b):
    if b.augmentation() != 0:
        raise DomainError("phi is defined on the augmentation ideal only")
    g = b.graph
    return GroupoidElement(g, {p: c * phi_basis(g, p) for p, c in b.terms.items()})


def check_homotope_iso(g, max_len, report=False):
    """Compare x_a x_b with phi(x_a) Delta phi(x_b) for all nonempty basis
    paths of length <= max_len. Returns a bool, or (ok, pairs, mismatches)
    with report=True."""
    paths = enumerate_contracted_dense(g, max_len)[1:]
    delta = laplacian(g)
    left_by_end = {}
    for p in paths:
        left = groupoid_mul(GroupoidElement._raw(g, {p: phi_basis(g, p)}), delta)
        left_by_end[p] = left.by_end()
    pairs = 0
    bad = []
    for p in paths:
        ends = left_by_end[p]
        for q in paths:
            pairs += 1
            expected = {}
            r = mul_basis(g, p, q)
            if r is not None:
                expected[r[0]] = r[1] * phi_basis(g, r[0])
            got = {}
            cq = phi_basis(g, q)
            for t, c in ends.get(q[0], ()):
                path = kernels.contract(t + q[1:], g.n, g.edge_index)[0]
                v = got.get(path, 0) + c * cq
                if v == 0:
                    got.pop(path, None)
                else:
                    got[path] = v
            if got != expected:
                bad.append((p, q))
    ok = not bad
    return (ok, pairs, bad) if report else ok


def associativity_scan(g, max_len):
    """(triples checked, failing triples) over all basis paths of length <=
    max_len, including the unit."""
    paths = enumerate_contracted_dense(g, max_len)
    checked, failures = kernels.assoc_scan(paths, g.n, g.edge_index, len(g.edges))
    return checked, [tuple(paths[k] for k in t) for t in failures]


def psi_injectivity_filtered(g, max_len, which=(1, 2), seed=0):
    """Rank of psi on the span of nonempty basis paths (the augmentation
    ideal) of length <= max_len equals their number. Symbolic parameters are
    specialized at seeded rationals."""
    if not g.is_connected() and g.n > 1 and g.edges:
        warnings.warn("graph is disconnected", PreconditionWarning, stacklevel=2)
    if has_tail(g):
        warnings.warn("graph has a tail; psi need not be injective", PreconditionWarning,
                      stacklevel=2)
    g = specialize(g, seed)
    paths = enumerate_contracted_dense(g, max_len)[1:]
    for w in ((which,) if isinstance(which, int) else which):
        gens = [psi_generator(g, w, i) for i in range(g.n)]
        cols = {}
        rows = []
        for p in paths:
            z = psi_path(g, w, p, gens)
            rows.append({cols.setdefault(t, len(cols)): c for t, c in z.terms.items()})
        if linalg.rank_sparse(rows) != len(paths):
            return False
    return True


def multiplication_table(g, max_len):
    """Nonzero products of basis paths as (a, b, product path, coefficient)."""
    paths = enumerate_contracted_dense(g, max_len)
    out = []
    for p in paths:
        for q in paths:
            r = mul_basis(g, p, q)
            if r is not None:
                out.append((p, q, r[0], r[1]))
    return out
