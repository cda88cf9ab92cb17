"""Pure-Python kernels. Reference implementation and fallback for _kernels.pyx.

Paths are tuples of dense vertex indices. ``edge_index`` is a flat list of
length n*n holding the edge id of (u, v) at u*n + v, or -1 for a non-edge.
"""


def contract(seq, n, edge_index):
    """Minimal contraction of a vertex sequence.

    Returns (path, popped) where popped lists the edge id of every removed
    backtrack i -> j -> i (with repetition).
    """
    stack = []
    popped = []
    for v in seq:
        if stack:
            if stack[-1] == v:
                continue
            if len(stack) >= 2 and stack[-2] == v:
                top = stack.pop()
                popped.append(edge_index[v * n + top])
                continue
        stack.append(v)
    return tuple(stack), popped


def _mul(a, b, n, edge_index):
    """Product of two basis paths as (path, popped) or None for zero."""
    if not a:
        return b, []
    if not b:
        return a, []
    i, j = a[-1], b[0]
    if i != j and edge_index[i * n + j] < 0:
        return None
    return contract(a + b, n, edge_index)


def assoc_scan(paths, n, edge_index, n_edges):
    """Check (ab)c == a(bc) on all triples of basis paths.

    Both sides are compared as contracted path plus exponent vector, which is
    exact for any specialization of the edge parameters. Returns
    (number of triples checked, list of failing index triples).
    """
    paths = [tuple(p) for p in paths]
    m = len(paths)
    table = {}
    for x in range(m):
        for y in range(m):
            r = _mul(paths[x], paths[y], n, edge_index)
            if r is not None:
                table[x, y] = r
    checked = 0
    failures = []
    for x in range(m):
        a = paths[x]
        for y in range(m):
            ab = table.get((x, y))
            for z in range(m):
                checked += 1
                c = paths[z]
                bc = table.get((y, z))
                left = right = None
                if ab is not None:
                    r = _mul(ab[0], c, n, edge_index)
                    if r is not None:
                        left = (r[0], sorted(ab[1] + r[1]))
                if bc is not None:
                    r = _mul(a, bc[0], n, edge_index)
                    if r is not None:
                        right = (r[0], sorted(bc[1] + r[1]))
                if left != right:
                    failures.append((x, y, z))
    return checked, failures


def int_rank(rows):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, nrows):
            f = a[i][col]
            row_i = a[i]
            row_r = a[rank]
            for j in range(col + 1, ncols):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank
