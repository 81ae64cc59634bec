# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Mirrors ``nsk._purecore`` function by function."""

from libc.stdlib cimport malloc, calloc, free

cdef extern from *:
    """
    static int nsk_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static int nsk_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int nsk_mul_ovf(long long a, long long b, long long *r) nogil
    int nsk_sub_ovf(long long a, long long b, long long *r) nogil


def membership_table(gens):
    cdef list gl = [int(a) for a in gens]
    cdef Py_ssize_t r = len(gl), i
    cdef long long m = min(gl)
    cdef long long n = 0, last_gap = -1, cap = 64
    cdef long long *g = <long long *> malloc(r * sizeof(long long))
    cdef unsigned char *t = <unsigned char *> malloc(cap)
    cdef unsigned char *tmp
    cdef bint member
    if g == NULL or t == NULL:
        free(g)
        free(t)
        raise MemoryError()
    try:
        for i in range(r):
            g[i] = gl[i]
        t[0] = 1
        while n - last_gap < m:
            n += 1
            if n >= cap:
                cap *= 2
                tmp = <unsigned char *> malloc(cap)
                if tmp == NULL:
                    raise MemoryError()
                for i in range(n):
                    tmp[i] = t[i]
                free(t)
                t = tmp
            member = False
            for i in range(r):
                if g[i] <= n and t[n - g[i]]:
                    member = True
                    break
            t[n] = member
            if not member:
                last_gap = n
        return [bool(t[i]) for i in range(last_gap + 1)], last_gap + 1
    finally:
        free(g)
        free(t)


cdef void _fact_rec(long long *g, Py_ssize_t r, Py_ssize_t i, long long rem,
                    long long *cur, list out):
    cdef long long k
    if i == r - 1:
        if rem % g[i] == 0:
            cur[i] = rem // g[i]
            out.append(tuple([cur[j] for j in range(r)]))
            cur[i] = 0
        return
    k = 0
    while k * g[i] <= rem:
        cur[i] = k
        _fact_rec(g, r, i + 1, rem - k * g[i], cur, out)
        k += 1
    cur[i] = 0


def factorizations(gens, n):
    cdef list gl = [int(a) for a in gens]
    cdef Py_ssize_t r = len(gl), i
    cdef list out = []
    if n < 0 or r == 0:
        return out
    cdef long long *g = <long long *> malloc(r * sizeof(long long))
    cdef long long *cur = <long long *> calloc(r, sizeof(long long))
    if g == NULL or cur == NULL:
        free(g)
        free(cur)
        raise MemoryError()
    try:
        for i in range(r):
            g[i] = gl[i]
        _fact_rec(g, r, 0, n, cur, out)
        return out
    finally:
        free(g)
        free(cur)


cdef int _bareiss(long long *m, Py_ssize_t nrows, Py_ssize_t ncols, Py_ssize_t *rank_out) nogil:
    # Returns 1 on int64 overflow, 0 otherwise.
    cdef Py_ssize_t rank = 0, col, piv, i, j
    cdef long long prev = 1, p, f, a, b, d, x
    for col in range(ncols):
        if rank == nrows:
            break
        piv = rank
        while piv < nrows and m[piv * ncols + col] == 0:
            piv += 1
        if piv == nrows:
            continue
        if piv != rank:
            for j in range(ncols):
                x = m[rank * ncols + j]
                m[rank * ncols + j] = m[piv * ncols + j]
                m[piv * ncols + j] = x
        p = m[rank * ncols + col]
        for i in range(rank + 1, nrows):
            f = m[i * ncols + col]
            for j in range(col + 1, ncols):
                if nsk_mul_ovf(m[i * ncols + j], p, &a):
                    return 1
                if nsk_mul_ovf(f, m[rank * ncols + j], &b):
                    return 1
                if nsk_sub_ovf(a, b, &d):
                    return 1
                m[i * ncols + j] = d // prev
            m[i * ncols + col] = 0
        prev = p
        rank += 1
    rank_out[0] = rank
    return 0


def integer_rank(rows):
    cdef list rl = [list(r) for r in rows if any(r)]
    cdef Py_ssize_t nrows = len(rl), ncols, i, j, rank = 0
    cdef int ovf
    if nrows == 0:
        return 0
    ncols = len(rl[0])
    cdef long long *m = <long long *> malloc(nrows * ncols * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(nrows):
            for j in range(ncols):
                m[i * ncols + j] = rl[i][j]
        with nogil:
            ovf = _bareiss(m, nrows, ncols, &rank)
    except OverflowError:
        ovf = 1
    finally:
        free(m)
    if ovf:
        from nsk._purecore import integer_rank as slow_rank
        return slow_rank(rl)
    return rank


cdef void _visit(unsigned char *member, long long g, long long frob, long long mult,
                 long long genus, list out):
    cdef long long x, a, n
    cdef bint minimal
    if genus == g:
        out.append(tuple([n for n in range(1, frob + 1) if not member[n]]))
        return
    for x in range(max(frob + 1, 1), max(frob + mult, mult) + 1):
        if not member[x]:
            continue
        minimal = True
        for a in range(mult, x // 2 + 1):
            if member[a] and member[x - a]:
                minimal = False
                break
        if not minimal:
            continue
        member[x] = 0
        _visit(member, g, x, x + 1 if x == mult else mult, genus + 1, out)
        member[x] = 1


def gap_sets_by_genus(long long g):
    cdef Py_ssize_t size = 3 * g + 3, i
    cdef list out = []
    cdef unsigned char *member = <unsigned char *> malloc(size)
    if member == NULL:
        raise MemoryError()
    try:
        for i in range(size):
            member[i] = 1
        _visit(member, g, -1, 1, 0, out)
        return out
    finally:
        free(member)


def factorization_components(gens, n):
    cdef list facts = factorizations(gens, n)
    cdef Py_ssize_t nf = len(facts), r = len(gens), i, j, first, x, y
    if nf == 0:
        return []
    cdef Py_ssize_t *parent = <Py_ssize_t *> malloc(nf * sizeof(Py_ssize_t))
    cdef long long *flat = <long long *> malloc(nf * r * sizeof(long long))
    cdef dict groups = {}
    if parent == NULL or flat == NULL:
        free(parent)
        free(flat)
        raise MemoryError()
    try:
        for i in range(nf):
            parent[i] = i
            f = facts[i]
            for j in range(r):
                flat[i * r + j] = f[j]
        for j in range(r):
            first = -1
            for i in range(nf):
                if flat[i * r + j]:
                    if first < 0:
                        first = i
                    else:
                        x = i
                        while parent[x] != x:
                            parent[x] = parent[parent[x]]
                            x = parent[x]
                        y = first
                        while parent[y] != y:
                            parent[y] = parent[parent[y]]
                            y = parent[y]
                        parent[x] = y
        for i in range(nf):
            x = i
            while parent[x] != x:
                x = parent[x]
            groups.setdefault(x, []).append(facts[i])
        return list(groups.values())
    finally:
        free(parent)
        free(flat)
