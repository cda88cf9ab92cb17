"""Rank-1 projector configurations subordinated to a graph.

A projector is stored as a vector e and a covector x with (x, e) = 1, so
p = e (x) x and p_i p_j p_i = (x_i, e_j)(x_j, e_i) p_i. Everything below is
phrased through the Gram pairings (x_i, e_j).
"""
import warnings
from fractions import Fraction

from . import linalg
from .errors import DomainError, PreconditionWarning
from .graph import GraphError, cycle_basis
from .groupoid import laplacian, to_matrix
from .scalars import format_scalar, inv, parse_scalar


def pairing(x, e):
    acc = Fraction(0)
    for a, b in zip(x, e):
        if a != 0 and b != 0:
            acc = acc + a * b
    return acc


class Projector:
    """Rank-1 idempotent e (x) x. With normalize=True the covector is rescaled
    so that (x, e) = 1; otherwise a pairing other than 1 is rejected."""

    __slots__ = ("e", "x")

    def __init__(self, e, x, normalize=False):
        e = [Fraction(v) if isinstance(v, int) else v for v in e]
        x = [Fraction(v) if isinstance(v, int) else v for v in x]
        if len(e) != len(x):
            raise DomainError("vector and covector have different lengths")
        p = pairing(x, e)
        if p != 1:
            if not normalize or p == 0:
                raise DomainError(f"pairing (x, e) = {format_scalar(p)}, expected 1")
            c = inv(p)
            x = [c * v for v in x]
        self.e = tuple(e)
        self.x = tuple(x)

    @property
    def dim(self):
        return len(self.e)

    def matrix(self):
        return [[a * b for b in self.x] for a in self.e]

    def dual(self):
        return Projector(self.x, self.e)

    def __eq__(self, other):
        return isinstance(other, Projector) and self.e == other.e and self.x == other.x

    def __hash__(self):
        return hash((self.e, self.x))


class ProjectorConfig:
    """One projector per vertex (dense order) in a common space of dim n.

    ``r`` maps edge ids to the target r_ij; by default r_ij = s_ij^2.
    """

    def __init__(self, graph, projectors, r=None):
        projectors = list(projectors)
        if len(projectors) != graph.n:
            raise DomainError(f"expected {graph.n} projectors, got {len(projectors)}")
        dims = {p.dim for p in projectors}
        if len(dims) > 1:
            raise DomainError("projectors live in spaces of different dimensions")
        self.graph = graph
        self.projectors = projectors
        self.dim = dims.pop() if dims else 0
        if r is None:
            self.r = [s ** 2 for s in graph.params]
        elif isinstance(r, (list, tuple)):
            self.r = list(r)
        else:
            self.r = [r] * len(graph.edges)

    def gram(self):
        """G[i][j] = (x_i, e_j)."""
        ps = self.projectors
        return [[pairing(p.x, q.e) for q in ps] for p in ps]

    def to_dict(self):
        return {
            "dim": self.dim,
            "projectors": [
                {"vertex": v, "e": [format_scalar(a) for a in p.e],
                 "x": [format_scalar(a) for a in p.x]}
                for v, p in zip(self.graph.vertices, self.projectors)],
            "r": [format_scalar(a) for a in self.r],
        }


def config_from_dict(graph, data, conductor=None):
    by_vertex = {}
    for item in data.get("projectors", []):
        e = [parse_scalar(str(v), conductor=conductor) for v in item["e"]]
        x = [parse_scalar(str(v), conductor=conductor) for v in item["x"]]
        by_vertex[item["vertex"]] = Projector(e, x, normalize=bool(data.get("normalize")))
    missing = [v for v in graph.vertices if v not in by_vertex]
    if missing:
        raise DomainError(f"no projector for vertices {missing}")
    r = data.get("r")
    if isinstance(r, list):
        r = [parse_scalar(str(v), conductor=conductor) for v in r]
    elif r is not None:
        r = parse_scalar(str(r), conductor=conductor)
    return ProjectorConfig(graph, [by_vertex[v] for v in graph.vertices], r)


def check_config(c):
    """Edge relations (x_i,e_j)(x_j,e_i) = r_ij and non-edge orthogonality
    (x_i,e_j) = (x_j,e_i) = 0. Returns {"ok": bool, "failures": [...]}."""
    g = c.graph
    G = c.gram()
    failures = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            u, v = g.vertices[i], g.vertices[j]
            if g.adjacent(i, j):
                k = g.edge_id[i, j]
                got = G[i][j] * G[j][i]
                if got != c.r[k]:
                    failures.append({"edge": [u, v], "relation": "unbiased",
                                     "expected": format_scalar(c.r[k]),
                                     "got": format_scalar(got)})
            else:
                if G[i][j] != 0 or G[j][i] != 0:
                    failures.append({"pair": [u, v], "relation": "orthogonal",
                                     "got": [format_scalar(G[i][j]), format_scalar(G[j][i])]})
    return {"ok": not failures, "failures": failures}


def _closed(c, path):
    g = c.graph
    p = g.dense(path)
    if not p:
        raise DomainError("empty cycle")
    if p[0] != p[-1] and len(p) > 1:
        raise DomainError(f"path {list(path)} is not closed")
    if not g.is_valid_dense(p):
        raise GraphError(f"invalid path {list(path)}")
    return p


def _trace_dense(c, p):
    if len(p) == 1:
        return Fraction(1)
    G = c.gram()
    t = Fraction(1)
    for a, b in zip(p, p[1:]):
        t = t * G[a][b]
    return t


def trace_cycle(c, path):
    """T_gamma = tr(p_{i0} p_{i1} ... p_{i(t-1)}) for a closed path."""
    return _trace_dense(c, _closed(c, path))


def _s_dense(c, p):
    g = c.graph
    t = _trace_dense(c, p)
    for a, b in zip(p, p[1:]):
        if a != b:
            t = t / g.s(a, b)
    return t


def s_invariant(c, path):
    """S_gamma = T_gamma / prod of s over the edges traversed."""
    return _s_dense(c, _closed(c, path))


def sclass(c, basis=None):
    """S on each fundamental cycle of the cycle basis (the character of c)."""
    if basis is None:
        basis = cycle_basis(c.graph)
    return [_s_dense(c, cyc) for cyc in basis.cycles]


def minimalize_gram(G):
    """Vectors/covectors of dimension rank(G) reproducing the pairings G."""
    n = len(G)
    pivots, cols = linalg.column_space(G)
    k = len(pivots)
    if k == 0:
        return [], []
    C = linalg.transpose(cols)
    es = []
    for j in range(n):
        coords = linalg.solve(C, [G[i][j] for i in range(n)])
        es.append(coords)
    xs = [list(C[i]) for i in range(n)]
    return es, xs


def minimalize(c):
    """S-equivalent configuration in dimension rank(Gram): images span and
    kernels meet trivially. All pairings, hence all T and S, are kept."""
    es, xs = minimalize_gram(c.gram())
    if not es:
        raise DomainError("every pairing vanishes; no nonzero minimal configuration")
    return ProjectorConfig(c.graph, [Projector(e, x) for e, x in zip(es, xs)], c.r)


def is_minimal(c):
    n = c.dim
    return (linalg.rank([list(p.e) for p in c.projectors]) == n
            and linalg.rank([list(p.x) for p in c.projectors]) == n)


def character_matrix(g, chi, basis=None):
    """Laplacian of g in the rank-1 local system with monodromy chi, as a
    scalar matrix."""
    if not g.is_connected():
        raise DomainError("from_character needs a connected graph")
    if g.is_symbolic():
        raise DomainError("edge parameters must be numeric")
    if basis is None:
        basis = cycle_basis(g)
    if len(chi) != basis.rank:
        raise DomainError(f"character needs {basis.rank} values, got {len(chi)}")
    if any(v == 0 for v in chi):
        raise DomainError("character values must be nonzero")
    point = dict(zip(basis.variables(), chi))
    return to_matrix(laplacian(g), basis).evaluate(point)


def from_character(g, chi, basis=None):
    """Minimal rank-1 configuration with S = chi on the cycle basis.

    The local system W has one line per vertex, L = rho(Delta) and the
    projectors are rho(Delta e_i) restricted to W_min = Im L. In the basis C
    of Im L given by pivot columns, p_i has vector L[:, i] in C-coordinates
    and covector row i of C, so the pairings are exactly L_ij.
    """
    L = character_matrix(g, chi, basis)
    es, xs = minimalize_gram(L)
    return ProjectorConfig(g, [Projector(e, x) for e, x in zip(es, xs)])


def commutant_dim(c):
    """dim {M : M p_i = p_i M for all i}."""
    return commutant_dim_of_matrices([p.matrix() for p in c.projectors])


def commutant_is_scalar(c):
    if not c.graph.is_connected():
        warnings.warn("graph is disconnected", PreconditionWarning, stacklevel=2)
    if not is_minimal(c):
        warnings.warn("configuration is not minimal", PreconditionWarning, stacklevel=2)
    return commutant_dim(c) == 1


def dualize(c):
    """Adjoint projectors on the dual space: e and x swap roles."""
    return ProjectorConfig(c.graph, [p.dual() for p in c.projectors], c.r)


def pad(c, k):
    """c in a space k dimensions larger (zero block appended)."""
    z = [Fraction(0)] * k
    return ProjectorConfig(c.graph, [Projector(list(p.e) + z, list(p.x) + z)
                                     for p in c.projectors], c.r)


def doubled(c):
    """Projector matrices of c (+) c. These have rank 2, so the result is a
    list of matrices rather than a configuration."""
    out = []
    for p in c.projectors:
        P = p.matrix()
        out.append(linalg.direct_sum(P, P))
    return out


def commutant_dim_of_matrices(mats):
    """dim of the space of matrices commuting with every matrix in mats."""
    n = len(mats[0]) if mats else 0
    rows = []
    for P in mats:
        for r in range(n):
            for col in range(n):
                row = {}
                for k in range(n):
                    if P[k][col] != 0:
                        row[r * n + k] = row.get(r * n + k, 0) + P[k][col]
                    if P[r][k] != 0:
                        row[k * n + col] = row.get(k * n + col, 0) - P[r][k]
                row = {a: v for a, v in row.items() if v != 0}
                if row:
                    rows.append(row)
    return n * n - linalg.rank_sparse(rows)
