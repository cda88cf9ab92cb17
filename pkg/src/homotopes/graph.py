"""Simply-laced graphs with edge parameters, paths and their contraction.

Vertex identifiers are opaque (ints or strings) and are mapped to dense
indices 0..n-1 in declared order. Public path arguments use identifiers;
the ``*_dense`` helpers work on index tuples and are what the algebra
modules use internally.
"""
import json
import re
from collections import deque
from fractions import Fraction

from . import kernels
from .scalars import LaurentPoly, parse_scalar


class GraphError(ValueError):
    pass


class Graph:
    """Immutable simple graph with a symmetric nonzero parameter per edge."""

    def __init__(self, vertices, edges, params=None):
        vertices = list(vertices)
        if len(set(vertices)) != len(vertices):
            raise GraphError("duplicate vertex identifiers")
        self.vertices = tuple(vertices)
        self.index = {v: k for k, v in enumerate(vertices)}
        self.n = len(vertices)
        params = dict(params or {})

        seen = {}
        for u, v in edges:
            if u not in self.index or v not in self.index:
                raise GraphError(f"edge ({u}, {v}) uses an unknown vertex")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            i, j = sorted((self.index[u], self.index[v]))
            if (i, j) in seen:
                raise GraphError(f"multiple edges between {u} and {v}")
            seen[i, j] = None
        self.edges = tuple(sorted(seen))
        self.edge_id = {}
        for k, (i, j) in enumerate(self.edges):
            self.edge_id[i, j] = k
            self.edge_id[j, i] = k

        s = []
        for i, j in self.edges:
            u, v = self.vertices[i], self.vertices[j]
            a, b = params.get((u, v)), params.get((v, u))
            if a is not None and b is not None and a != b:
                raise GraphError(f"s({u},{v}) = {a} differs from s({v},{u}) = {b}")
            val = a if a is not None else b
            if val is None:
                val = LaurentPoly.var(_default_symbol(u, v))
            elif isinstance(val, (int, str)):
                val = parse_scalar(val) if isinstance(val, str) else Fraction(val)
            if val == 0:
                raise GraphError(f"edge ({u},{v}) has zero parameter")
            s.append(val)
        self.params = tuple(s)

        self.neighbors = tuple(
            tuple(sorted(j for j in range(self.n) if (i, j) in self.edge_id))
            for i in range(self.n))
        self.edge_index = [self.edge_id.get((i, j), -1)
                           for i in range(self.n) for j in range(self.n)]

    # -- basic queries ----------------------------------------------------

    def s(self, i, j):
        """Parameter of the edge between dense indices i and j."""
        return self.params[self.edge_id[i, j]]

    def r(self, i, j):
        return self.s(i, j) ** 2

    def adjacent(self, i, j):
        return (i, j) in self.edge_id

    def degree(self, i):
        return len(self.neighbors[i])

    def edge_label(self, k):
        i, j = self.edges[k]
        return self.vertices[i], self.vertices[j]

    def components(self):
        comp = [-1] * self.n
        count = 0
        for root in range(self.n):
            if comp[root] >= 0:
                continue
            comp[root] = count
            queue = deque([root])
            while queue:
                i = queue.popleft()
                for j in self.neighbors[i]:
                    if comp[j] < 0:
                        comp[j] = count
                        queue.append(j)
            count += 1
        return count

    def is_connected(self):
        return self.n > 0 and self.components() == 1

    def is_symbolic(self):
        return any(isinstance(p, LaurentPoly) for p in self.params)

    def with_params(self, values):
        """Copy with parameters replaced; values is a list in edge order or a
        dict keyed by identifier pairs."""
        if isinstance(values, dict):
            params = dict(values)
        else:
            values = list(values)
            if len(values) != len(self.edges):
                raise GraphError(f"expected {len(self.edges)} parameters, got {len(values)}")
            params = {self.edge_label(k): v for k, v in enumerate(values)}
        return Graph(self.vertices, [self.edge_label(k) for k in range(len(self.edges))], params)

    # -- paths -------------------------------------------------------------

    def dense(self, path):
        try:
            return tuple(self.index[v] for v in path)
        except KeyError as exc:
            raise GraphError(f"unknown vertex {exc.args[0]!r}") from None

    def ids(self, path):
        return tuple(self.vertices[i] for i in path)

    def is_valid_dense(self, path):
        return all(a == b or (a, b) in self.edge_id for a, b in zip(path, path[1:]))

    # -- serialization -----------------------------------------------------

    def to_dict(self):
        from .scalars import format_scalar
        return {
            "vertices": list(self.vertices),
            "edges": [{"u": u, "v": v, "s": format_scalar(self.params[k])}
                      for k, (u, v) in enumerate(map(self.edge_label, range(len(self.edges))))],
        }

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.vertices == other.vertices
                and self.edges == other.edges and self.params == other.params)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={[self.edge_label(k) for k in range(len(self.edges))]})"


def _default_symbol(u, v):
    return "s_" + re.sub(r"\W", "_", f"{u}_{v}")


def from_dict(data):
    if not isinstance(data, dict) or "vertices" not in data:
        raise GraphError("graph description needs a 'vertices' list")
    edges, params = [], {}
    for e in data.get("edges", []):
        try:
            u, v = e["u"], e["v"]
        except (KeyError, TypeError):
            raise GraphError(f"malformed edge entry {e!r}") from None
        edges.append((u, v))
        if "s" in e and e["s"] is not None:
            params[u, v] = parse_scalar(str(e["s"]))
    return Graph(data["vertices"], edges, params)


def load(path):
    with open(path) as fh:
        return from_dict(json.load(fh))


# -- builders ------------------------------------------------------------

def _params(edges, s):
    if s is None:
        return None
    if not isinstance(s, (list, tuple)):
        s = [s] * len(edges)
    if len(s) != len(edges):
        raise GraphError(f"expected {len(edges)} parameters, got {len(s)}")
    return {e: (Fraction(x) if isinstance(x, int) else x) for e, x in zip(edges, s)}


def path_graph(n, s=None):
    edges = [(k, k + 1) for k in range(1, n)]
    return Graph(range(1, n + 1), edges, _params(edges, s))


def cycle_graph(n, s=None):
    """C_n on vertices 1..n; s lists s_{12}, s_{23}, ..., s_{n1}."""
    if n < 3:
        raise GraphError("a simple cycle needs at least 3 vertices")
    edges = [(k, k % n + 1) for k in range(1, n + 1)]
    return Graph(range(1, n + 1), edges, _params(edges, s))


def multipartite_graph(m, n, s=None):
    """Gamma_m(n): m rows of n vertices, edges exactly between different rows.
    Vertex (row a, column b) is named "a.b" (1-based)."""
    verts = [f"{a}.{b}" for a in range(1, m + 1) for b in range(1, n + 1)]
    edges = [(u, v) for x, u in enumerate(verts) for v in verts[x + 1:]
             if u.split(".")[0] != v.split(".")[0]]
    return Graph(verts, edges, _params(edges, s))


def edgeless_graph(n):
    return Graph(range(1, n + 1), [])


# -- contraction -----------------------------------------------------------

def contract_dense(g, path):
    """(contracted path, {edge id: q}) for a valid dense path."""
    if not g.is_valid_dense(path):
        raise GraphError(f"invalid path {g.ids(path)}")
    out, popped = kernels.contract(tuple(path), g.n, g.edge_index)
    q = {}
    for k in popped:
        q[k] = q.get(k, 0) + 1
    return out, q


def contract(g, path):
    """Contract a path given by vertex identifiers.

    Returns (contracted path, {edge label: q}) where the removed detours
    contribute the coefficient prod s_e^(2 q_e).
    """
    out, q = contract_dense(g, g.dense(path))
    return g.ids(out), {g.edge_label(k): e for k, e in sorted(q.items())}


def is_contracted(path):
    return all(path[k] != path[k + 1] for k in range(len(path) - 1)) and \
        all(path[k] != path[k + 2] for k in range(len(path) - 2))


def enumerate_contracted_dense(g, max_len):
    """All contracted dense paths of edge length <= max_len: the empty path,
    then by length, then lexicographically."""
    if max_len < 0:
        raise GraphError("max_len must be nonnegative")
    out = [()]
    layer = [(i,) for i in range(g.n)]
    for length in range(max_len + 1):
        out.extend(layer)
        if length == max_len:
            break
        nxt = []
        for p in layer:
            prev = p[-2] if len(p) > 1 else None
            for j in g.neighbors[p[-1]]:
                if j != prev:
                    nxt.append(p + (j,))
        layer = nxt
    return out


def enumerate_contracted_paths(g, max_len):
    return [g.ids(p) for p in enumerate_contracted_dense(g, max_len)]


def has_tail(g):
    return any(g.degree(i) == 1 for i in range(g.n))


def diameter(g):
    best = 0
    for root in range(g.n):
        dist = {root: 0}
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in g.neighbors[i]:
                if j not in dist:
                    dist[j] = dist[i] + 1
                    queue.append(j)
        best = max(best, max(dist.values()))
    return best


# -- spanning tree and cycle basis -----------------------------------------

class CycleBasis:
    """Spanning forest plus one generator per oriented non-tree edge.

    ``generators[k]`` is a dense pair (u, v) with u < v; ``cycles[k]`` is the
    closed dense path u -> v followed by the tree path back to u.
    ``parent`` and ``depth`` describe the forest (root parent is None).
    """

    def __init__(self, g, tree_edges, generators, cycles, parent, depth, roots):
        self.graph = g
        self.tree_edges = tree_edges
        self.generators = generators
        self.cycles = cycles
        self.parent = parent
        self.depth = depth
        self.roots = roots

    @property
    def rank(self):
        return len(self.generators)

    def variables(self):
        if self.rank == 1:
            return ["x"]
        return [f"x{k + 1}" for k in range(self.rank)]

    def tree_path(self, a, b):
        """Dense path from a to b inside the forest (same component)."""
        up_a, up_b = [a], [b]
        while self.depth[up_a[-1]] > self.depth[up_b[-1]]:
            up_a.append(self.parent[up_a[-1]])
        while self.depth[up_b[-1]] > self.depth[up_a[-1]]:
            up_b.append(self.parent[up_b[-1]])
        while up_a[-1] != up_b[-1]:
            if self.parent[up_a[-1]] is None:
                raise GraphError("vertices lie in different components")
            up_a.append(self.parent[up_a[-1]])
            up_b.append(self.parent[up_b[-1]])
        return tuple(up_a + up_b[-2::-1])

    def winding(self, path):
        """Net signed count of each generator traversed by a dense path."""
        gen_index = {e: k for k, e in enumerate(self.generators)}
        w = [0] * self.rank
        for a, b in zip(path, path[1:]):
            if a == b:
                continue
            if (a, b) in gen_index:
                w[gen_index[a, b]] += 1
            elif (b, a) in gen_index:
                w[gen_index[b, a]] -= 1
        return w


def cycle_basis(g, tree_edges=None):
    """Fundamental cycles for a spanning forest.

    By default the forest is grown breadth-first from the first declared
    vertex of each component. ``tree_edges`` (identifier pairs) overrides it;
    it must be a spanning forest.
    """
    parent = [None] * g.n
    depth = [0] * g.n
    seen = [False] * g.n
    roots = []
    if tree_edges is None:
        tree = set()
        for root in range(g.n):
            if seen[root]:
                continue
            roots.append(root)
            seen[root] = True
            queue = deque([root])
            while queue:
                i = queue.popleft()
                for j in g.neighbors[i]:
                    if not seen[j]:
                        seen[j] = True
                        parent[j] = i
                        depth[j] = depth[i] + 1
                        tree.add(g.edge_id[i, j])
                        queue.append(j)
    else:
        tree = set()
        adj = [[] for _ in range(g.n)]
        for u, v in tree_edges:
            i, j = g.dense((u, v))
            if (i, j) not in g.edge_id:
                raise GraphError(f"tree edge ({u},{v}) is not an edge")
            tree.add(g.edge_id[i, j])
            adj[i].append(j)
            adj[j].append(i)
        for root in range(g.n):
            if seen[root]:
                continue
            roots.append(root)
            seen[root] = True
            queue = deque([root])
            while queue:
                i = queue.popleft()
                for j in sorted(adj[i]):
                    if seen[j]:
                        if j != parent[i]:
                            raise GraphError("tree edges contain a cycle")
                        continue
                    seen[j] = True
                    parent[j] = i
                    depth[j] = depth[i] + 1
                    queue.append(j)
        if len(tree) != g.n - len(roots) or g.components() != len(roots):
            raise GraphError("tree edges do not form a spanning forest")
    generators = [g.edges[k] for k in range(len(g.edges)) if k not in tree]
    cb = CycleBasis(g, sorted(tree), generators, [], parent, depth, roots)
    cb.cycles = [(u,) + cb.tree_path(v, u) for u, v in generators]
    return cb
