# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels, n <= 64 (exact stage n <= 26 for the 2^n tables).

Mirrors _kernels_py exactly: same orderings, tie-breaks and counts.
Families are C arrays of uint64 masks, deduplicated by sort+unique.
"""

from libc.stdlib cimport malloc, realloc, free, qsort
from libc.string cimport memset
from libc.stdint cimport uint64_t, int64_t, int32_t, int8_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

HAVE_COMPILED = True

DEF MAXN = 64


cdef int _cmp_u64(const void *a, const void *b) noexcept nogil:
    cdef uint64_t x = (<const uint64_t *> a)[0]
    cdef uint64_t y = (<const uint64_t *> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


cdef Py_ssize_t _dedup(uint64_t *buf, Py_ssize_t k) noexcept nogil:
    cdef Py_ssize_t i, w = 0
    if k <= 1:
        return k
    qsort(buf, <size_t> k, sizeof(uint64_t), _cmp_u64)
    for i in range(1, k):
        if buf[i] != buf[w]:
            w += 1
            buf[w] = buf[i]
    return w + 1


cdef Py_ssize_t _increment(const uint64_t *src, Py_ssize_t m, uint64_t *dst,
                           uint64_t nv_rest, uint64_t vbit) noexcept nogil:
    cdef Py_ssize_t i, k = 0
    cdef uint64_t s0
    for i in range(m):
        s0 = src[i] & ~vbit
        dst[k] = s0
        dst[k + 1] = s0 | nv_rest
        k += 2
    return _dedup(dst, k)


cdef struct Buf:
    uint64_t *ptr
    Py_ssize_t cap


cdef int _reserve(Buf *b, Py_ssize_t need) except -1:
    cdef uint64_t *p
    if b.cap >= need:
        return 0
    while b.cap < need:
        b.cap *= 2
    p = <uint64_t *> realloc(b.ptr, b.cap * sizeof(uint64_t))
    if p == NULL:
        raise MemoryError()
    b.ptr = p
    return 0


cdef void _load_adj(uint64_t *c_adj, int n, adj):
    cdef int i
    for i in range(n):
        c_adj[i] = adj[i]


def chain_un_sizes(int n, adj, order):
    cdef uint64_t c_adj[MAXN]
    cdef uint64_t left = 0, vbit, nv
    cdef Py_ssize_t m = 1
    cdef int i, v
    cdef Buf fam, out, swp
    if n > MAXN:
        raise ValueError("compiled kernel limited to n <= 64")
    _load_adj(c_adj, n, adj)
    fam.cap = 256
    out.cap = 256
    fam.ptr = <uint64_t *> malloc(fam.cap * sizeof(uint64_t))
    out.ptr = <uint64_t *> malloc(out.cap * sizeof(uint64_t))
    if fam.ptr == NULL or out.ptr == NULL:
        free(fam.ptr)
        free(out.ptr)
        raise MemoryError()
    sizes = []
    try:
        fam.ptr[0] = 0
        for i in range(n - 1):
            v = order[i]
            vbit = (<uint64_t> 1) << v
            nv = c_adj[v] & ~(left | vbit)
            _reserve(&out, 2 * m)
            m = _increment(fam.ptr, m, out.ptr, nv, vbit)
            swp = fam
            fam = out
            out = swp
            left |= vbit
            sizes.append(m)
        return sizes
    finally:
        free(fam.ptr)
        free(out.ptr)


cdef uint64_t _n2_candidates(uint64_t *c_adj, uint64_t left, uint64_t right) noexcept nogil:
    cdef uint64_t reach = left, n2 = 0, m, low
    m = left
    while m:
        low = m & (0 - m)
        reach |= c_adj[__builtin_ctzll(low)]
        m ^= low
    m = reach
    while m:
        low = m & (0 - m)
        n2 |= c_adj[__builtin_ctzll(low)]
        m ^= low
    m = n2 & right
    return m if m else right


def iun_greedy(int n, adj, int init, bint use_n2, long long bound):
    cdef uint64_t c_adj[MAXN]
    cdef uint64_t lrn[MAXN]
    cdef uint64_t full, left, right, cand, m, low, vbit, nvr
    cdef Py_ssize_t fam_n, best_n, w
    cdef int v, chosen, lrn_n, i
    cdef bint hit
    cdef Buf fam, best, tmp, swp
    if n > MAXN:
        raise ValueError("compiled kernel limited to n <= 64")
    _load_adj(c_adj, n, adj)
    full = ((<uint64_t> 1) << (n - 1) << 1) - 1 if n else 0
    vbit = (<uint64_t> 1) << init
    left = vbit
    right = full ^ vbit
    order = [init]
    trivial = [False]
    fam.cap = 256
    best.cap = 256
    tmp.cap = 256
    fam.ptr = <uint64_t *> malloc(fam.cap * sizeof(uint64_t))
    best.ptr = <uint64_t *> malloc(best.cap * sizeof(uint64_t))
    tmp.ptr = <uint64_t *> malloc(tmp.cap * sizeof(uint64_t))
    if fam.ptr == NULL or best.ptr == NULL or tmp.ptr == NULL:
        free(fam.ptr)
        free(best.ptr)
        free(tmp.ptr)
        raise MemoryError()
    try:
        fam.ptr[0] = 0
        fam.ptr[1] = c_adj[init] & right
        fam_n = 1 if fam.ptr[1] == 0 else 2
        sizes = [fam_n]
        if bound and n > 1 and fam_n > bound:
            return None
        while right:
            cand = _n2_candidates(c_adj, left, right) if use_n2 else right
            # left-right neighborhoods for the trivial test
            lrn_n = 0
            m = left
            while m:
                low = m & (0 - m)
                lrn[lrn_n] = c_adj[__builtin_ctzll(low)] & right
                lrn_n += 1
                m ^= low
            chosen = -1
            m = cand
            while m:
                low = m & (0 - m)
                v = __builtin_ctzll(low)
                nvr = c_adj[v] & right
                hit = nvr == 0
                i = 0
                while not hit and i < lrn_n:
                    hit = lrn[i] == nvr
                    i += 1
                if hit:
                    chosen = v
                    break
                m ^= low
            if chosen >= 0:
                trivial.append(True)
                vbit = (<uint64_t> 1) << chosen
                _reserve(&tmp, 2 * fam_n)
                fam_n = _increment(fam.ptr, fam_n, tmp.ptr,
                                   c_adj[chosen] & right & ~vbit, vbit)
                swp = fam
                fam = tmp
                tmp = swp
            else:
                trivial.append(False)
                best_n = -1
                m = cand
                while m:
                    low = m & (0 - m)
                    v = __builtin_ctzll(low)
                    _reserve(&tmp, 2 * fam_n)
                    w = _increment(fam.ptr, fam_n, tmp.ptr,
                                   c_adj[v] & right & ~low, low)
                    if best_n < 0 or w < best_n:
                        chosen = v
                        best_n = w
                        swp = best
                        best = tmp
                        tmp = swp
                    m ^= low
                swp = fam
                fam = best
                best = swp
                fam_n = best_n
            vbit = (<uint64_t> 1) << chosen
            left |= vbit
            right ^= vbit
            order.append(chosen)
            if right:
                sizes.append(fam_n)
                if bound and fam_n > bound:
                    return None
        return order, sizes[: n - 1], trivial
    finally:
        free(fam.ptr)
        free(best.ptr)
        free(tmp.ptr)


cdef void _dfs(int64_t x, uint64_t *fam, Py_ssize_t m, int level,
               uint64_t *c_adj, int n, int64_t K, int32_t *tun,
               uint64_t **levbuf, int64_t *explored) noexcept nogil:
    cdef uint64_t rest, scan, low, vbit
    cdef int v
    cdef int64_t y
    cdef Py_ssize_t w
    rest = (((<uint64_t> 1) << (n - 1) << 1) - 1) ^ (<uint64_t> x)
    scan = rest
    while scan:
        low = scan & (0 - scan)
        v = __builtin_ctzll(low)
        y = x | <int64_t> low
        if tun[y] < 0:
            w = _increment(fam, m, levbuf[level + 1],
                           c_adj[v] & rest & ~low, low)
            tun[y] = <int32_t> w
            explored[0] += 1
            if w <= K:
                _dfs(y, levbuf[level + 1], w, level + 1,
                     c_adj, n, K, tun, levbuf, explored)
        scan ^= low


def exact_stage(int n, adj, long long K):
    """DFS fills |UN| for subsets reachable under the K cap, then the
    pruned recurrence; returns (pv_or_None, explored, order_or_None)."""
    cdef uint64_t c_adj[MAXN]
    cdef uint64_t *levbuf[MAXN + 1]
    cdef int32_t *tun = NULL
    cdef int32_t *P = NULL
    cdef int8_t *pred = NULL
    cdef int64_t size, x, y, explored = 0, full
    cdef int32_t INF = 0x7FFFFFFF
    cdef int32_t px, ty, val
    cdef uint64_t rest, scan, low
    cdef int v, lev, half
    cdef Py_ssize_t capw
    cdef uint64_t root[1]
    if n > 26:
        raise ValueError("exact kernel limited to n <= 26")
    _load_adj(c_adj, n, adj)
    size = (<int64_t> 1) << n
    full = size - 1
    for lev in range(MAXN + 1):
        levbuf[lev] = NULL
    tun = <int32_t *> malloc(size * sizeof(int32_t))
    P = <int32_t *> malloc(size * sizeof(int32_t))
    pred = <int8_t *> malloc(size)
    try:
        if tun == NULL or P == NULL or pred == NULL:
            raise MemoryError()
        memset(tun, 0xFF, size * sizeof(int32_t))
        memset(pred, 0xFF, size)
        for x in range(size):
            P[x] = INF
        # per-level family buffers: a family at level L holds at most
        # min(K, 2^min(L, n-L)) members, and a child increment needs
        # twice the parent's count before dedup
        for lev in range(1, n + 1):
            half = lev - 1 if lev - 1 < n - (lev - 1) else n - (lev - 1)
            capw = (<Py_ssize_t> 1) << half
            if K < capw:
                capw = <Py_ssize_t> K
            capw = 2 * capw + 2
            levbuf[lev] = <uint64_t *> malloc(capw * sizeof(uint64_t))
            if levbuf[lev] == NULL:
                raise MemoryError()
        tun[0] = 0
        explored = 1
        if n > 0:
            root[0] = 0
            _dfs(0, root, 1, 0, c_adj, n, K, tun, levbuf, &explored)
        P[0] = 0
        for x in range(size):
            px = P[x]
            if px > K:
                continue
            rest = (<uint64_t> full) ^ (<uint64_t> x)
            scan = rest
            while scan:
                low = scan & (0 - scan)
                v = __builtin_ctzll(low)
                y = x | <int64_t> low
                ty = tun[y]
                if ty >= 0:
                    val = px if px > ty else ty
                    if val < P[y]:
                        P[y] = val
                        pred[y] = <int8_t> v
                    elif val == P[y] and v < pred[y]:
                        pred[y] = <int8_t> v
                scan ^= low
        if P[full] > K:
            return None, explored, None
        order = []
        y = full
        while y:
            v = pred[y]
            order.append(v)
            y ^= (<int64_t> 1) << v
        order.reverse()
        return int(P[full]), explored, order
    finally:
        free(tun)
        free(P)
        free(pred)
        for lev in range(MAXN + 1):
            free(levbuf[lev])
