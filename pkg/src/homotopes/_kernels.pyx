# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contracts as _kernels_py."""
from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef int _contract(const int* seq, int length, int n, const int* eidx,
                   int* out, int* exps) noexcept nogil:
    # writes the contracted path into out, adds popped edges into exps,
    # returns the contracted length
    cdef int top = 0
    cdef int k, v
    for k in range(length):
        v = seq[k]
        if top > 0:
            if out[top - 1] == v:
                continue
            if top >= 2 and out[top - 2] == v:
                exps[eidx[v * n + out[top - 1]]] += 1
                top -= 1
                continue
        out[top] = v
        top += 1
    return top


cdef int _mul(const int* a, int la, const int* b, int lb, int n, const int* eidx,
              int* buf, int* out, int* exps) noexcept nogil:
    # returns -1 for zero, else the result length in out
    cdef int k
    if la == 0:
        for k in range(lb):
            out[k] = b[k]
        return lb
    if lb == 0:
        for k in range(la):
            out[k] = a[k]
        return la
    if a[la - 1] != b[0] and eidx[a[la - 1] * n + b[0]] < 0:
        return -1
    for k in range(la):
        buf[k] = a[k]
    for k in range(lb):
        buf[la + k] = b[k]
    return _contract(buf, la + lb, n, eidx, out, exps)


def contract(seq, int n, edge_index):
    cdef int length = len(seq)
    cdef int* s = <int*>malloc((length + 1) * sizeof(int))
    cdef int* out = <int*>malloc((length + 1) * sizeof(int))
    cdef int* eidx = <int*>malloc((n * n + 1) * sizeof(int))
    cdef int k, top
    cdef int m = 0
    for k in range(n * n):
        eidx[k] = edge_index[k]
        if eidx[k] + 1 > m:
            m = eidx[k] + 1
    cdef int* exps = <int*>malloc((m + 1) * sizeof(int))
    memset(exps, 0, (m + 1) * sizeof(int))
    try:
        for k in range(length):
            s[k] = seq[k]
        top = _contract(s, length, n, eidx, out, exps)
        popped = []
        for k in range(m):
            popped.extend([k] * exps[k])
        return tuple(out[k] for k in range(top)), popped
    finally:
        free(s)
        free(out)
        free(eidx)
        free(exps)


def assoc_scan(paths, int n, edge_index, int n_edges):
    cdef int m = len(paths)
    cdef int maxlen = 0
    cdef int total = 0
    cdef int k, x, y, z, la, lb, lc, lab, lbc, ll, lr, j
    cdef bint same
    for p in paths:
        total += len(p)
        if len(p) > maxlen:
            maxlen = len(p)
    cdef int ne = n_edges + 1
    cdef int* flat = <int*>malloc((total + 1) * sizeof(int))
    cdef int* off = <int*>malloc((m + 1) * sizeof(int))
    cdef int* eidx = <int*>malloc((n * n + 1) * sizeof(int))
    cdef int cap = 3 * maxlen + 4
    cdef int* buf = <int*>malloc(cap * sizeof(int))
    cdef int* ab = <int*>malloc(cap * sizeof(int))
    cdef int* bc = <int*>malloc(cap * sizeof(int))
    cdef int* left = <int*>malloc(cap * sizeof(int))
    cdef int* right = <int*>malloc(cap * sizeof(int))
    cdef int* eab = <int*>malloc(ne * sizeof(int))
    cdef int* ebc = <int*>malloc(ne * sizeof(int))
    cdef int* el = <int*>malloc(ne * sizeof(int))
    cdef int* er = <int*>malloc(ne * sizeof(int))
    cdef long long checked = 0
    failures = []
    try:
        k = 0
        for x in range(m):
            off[x] = k
            for v in paths[x]:
                flat[k] = v
                k += 1
        off[m] = k
        for k in range(n * n):
            eidx[k] = edge_index[k]
        with nogil:
            for x in range(m):
                la = off[x + 1] - off[x]
                for y in range(m):
                    lb = off[y + 1] - off[y]
                    memset(eab, 0, ne * sizeof(int))
                    lab = _mul(flat + off[x], la, flat + off[y], lb, n, eidx, buf, ab, eab)
                    for z in range(m):
                        lc = off[z + 1] - off[z]
                        checked += 1
                        ll = -1
                        lr = -1
                        if lab >= 0:
                            for j in range(ne):
                                el[j] = eab[j]
                            ll = _mul(ab, lab, flat + off[z], lc, n, eidx, buf, left, el)
                        memset(ebc, 0, ne * sizeof(int))
                        lbc = _mul(flat + off[y], lb, flat + off[z], lc, n, eidx, buf, bc, ebc)
                        if lbc >= 0:
                            for j in range(ne):
                                er[j] = ebc[j]
                            lr = _mul(flat + off[x], la, bc, lbc, n, eidx, buf, right, er)
                        same = ll == lr
                        if same and ll >= 0:
                            for j in range(ll):
                                if left[j] != right[j]:
                                    same = False
                                    break
                            if same:
                                for j in range(ne):
                                    if el[j] != er[j]:
                                        same = False
                                        break
                        if not same:
                            with gil:
                                failures.append((x, y, z))
        return int(checked), failures
    finally:
        free(flat)
        free(off)
        free(eidx)
        free(buf)
        free(ab)
        free(bc)
        free(left)
        free(right)
        free(eab)
        free(ebc)
        free(el)
        free(er)


def int_rank(rows):
    cdef list a = [list(r) for r in rows]
    if not a:
        return 0
    cdef Py_ssize_t nrows = len(a), ncols = len(a[0])
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef list row_i, row_r
    prev = 1
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if a[i][col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        row_r = a[rank]
        p = row_r[col]
        for i in range(rank + 1, nrows):
            row_i = a[i]
            f = row_i[col]
            if f == 0:
                for j in range(col + 1, ncols):
                    row_i[j] = (p * row_i[j]) // prev
            else:
                for j in range(col + 1, ncols):
                    row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank
