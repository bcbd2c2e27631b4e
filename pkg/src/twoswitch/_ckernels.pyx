# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over 64-bit adjacency rows (n <= 64).

Mirrors ``_pykernels`` function for function; callers go through
``twoswitch.kernels`` which picks the backend.
"""

from libc.stdint cimport uint64_t, int64_t

from ._tables import CLASS_OF, CYCLES_OF, IS_ACTIVE_PATTERN, PATHS_OF

cdef int C_CLASS[64]
cdef int C_PATHS[64]
cdef int C_CYCLES[64]
cdef int C_ACTIVE[64]

cdef int _k
for _k in range(64):
    C_CLASS[_k] = CLASS_OF[_k]
    C_PATHS[_k] = PATHS_OF[_k]
    C_CYCLES[_k] = CYCLES_OF[_k]
    C_ACTIVE[_k] = IS_ACTIVE_PATTERN[_k]

MAX_N = 64


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popc(uint64_t x) nogil:
    return __builtin_popcountll(x)

cdef inline uint64_t bit(int i) nogil:
    return (<uint64_t>1) << i


cdef int _load(rows, int n, uint64_t* out) except -1:
    cdef int i
    if n > 64:
        raise ValueError("compiled kernels support n <= 64")
    for i in range(n):
        out[i] = <uint64_t>rows[i]
    return 0


cdef inline int _pattern(const uint64_t* r, int a, int b, int c, int d) nogil:
    return (<int>((r[a] >> b) & 1)
            | (<int>((r[a] >> c) & 1) << 1)
            | (<int>((r[a] >> d) & 1) << 2)
            | (<int>((r[b] >> c) & 1) << 3)
            | (<int>((r[b] >> d) & 1) << 4)
            | (<int>((r[c] >> d) & 1) << 5))


def census4(int n, rows):
    cdef uint64_t r[64]
    cdef int64_t counts[11]
    cdef int a, b, c, d, base
    cdef uint64_t ab
    _load(rows, n, r)
    for a in range(11):
        counts[a] = 0
    with nogil:
        for a in range(n):
            for b in range(a + 1, n):
                ab = (r[a] >> b) & 1
                for c in range(b + 1, n):
                    base = <int>ab | (<int>((r[a] >> c) & 1) << 1) | (<int>((r[b] >> c) & 1) << 3)
                    for d in range(c + 1, n):
                        counts[C_CLASS[base
                            | (<int>((r[a] >> d) & 1) << 2)
                            | (<int>((r[b] >> d) & 1) << 4)
                            | (<int>((r[c] >> d) & 1) << 5)]] += 1
    return [counts[i] for i in range(11)]


def subgraph_counts4(int n, rows):
    cdef uint64_t r[64]
    cdef int64_t p4 = 0, c4 = 0, k4 = 0
    cdef int a, b, c, d, pat
    _load(rows, n, r)
    with nogil:
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    for d in range(c + 1, n):
                        pat = _pattern(r, a, b, c, d)
                        p4 += C_PATHS[pat]
                        c4 += C_CYCLES[pat]
                        if pat == 63:
                            k4 += 1
    return p4, c4, k4


def active_mask(int n, rows):
    cdef uint64_t r[64]
    cdef uint64_t mask = 0, quad, full
    cdef int a, b, c, d
    _load(rows, n, r)
    full = (~(<uint64_t>0)) if n == 64 else (bit(n) - 1)
    with nogil:
        for a in range(n):
            for b in range(a + 1, n):
                for c in range(b + 1, n):
                    for d in range(c + 1, n):
                        quad = bit(a) | bit(b) | bit(c) | bit(d)
                        if (mask & quad) == quad:
                            continue
                        if C_ACTIVE[_pattern(r, a, b, c, d)]:
                            mask |= quad
                if mask == full:
                    break
            if mask == full:
                break
    return int(mask)


cdef inline tuple _canon(int a, int b, int c, int d):
    return min((a, b, c, d), (c, d, a, b), (b, a, d, c), (d, c, b, a))


cdef int _edge_arrays(const uint64_t* r, int n, int* eu, int* ev) nogil:
    cdef int u, v, m = 0
    cdef uint64_t rest
    for u in range(n):
        rest = (r[u] >> u) >> 1
        v = u + 1
        while rest:
            if rest & 1:
                eu[m] = u
                ev[m] = v
                m += 1
            rest >>= 1
            v += 1
    return m


def active_switches(int n, rows):
    cdef uint64_t r[64]
    cdef int eu[2016]
    cdef int ev[2016]
    cdef int m, i, j, a, b, c, d
    _load(rows, n, r)
    m = _edge_arrays(r, n, eu, ev)
    out = []
    for i in range(m):
        a = eu[i]
        b = ev[i]
        for j in range(i + 1, m):
            c = eu[j]
            d = ev[j]
            if c == a or c == b or d == a or d == b:
                continue
            if not ((r[a] >> c) & 1) and not ((r[b] >> d) & 1):
                out.append(_canon(a, b, c, d))
            if not ((r[a] >> d) & 1) and not ((r[b] >> c) & 1):
                out.append(_canon(a, b, d, c))
    out.sort()
    return out


def count_active_switches(int n, rows):
    cdef uint64_t r[64]
    cdef int eu[2016]
    cdef int ev[2016]
    cdef int m, i, j, a, b, c, d
    cdef int64_t total = 0
    cdef uint64_t ra, rb
    _load(rows, n, r)
    with nogil:
        m = _edge_arrays(r, n, eu, ev)
        for i in range(m):
            a = eu[i]
            b = ev[i]
            ra = r[a]
            rb = r[b]
            for j in range(i + 1, m):
                c = eu[j]
                d = ev[j]
                if c == a or c == b or d == a or d == b:
                    continue
                if not ((ra >> c) & 1) and not ((rb >> d) & 1):
                    total += 1
                if not ((ra >> d) & 1) and not ((rb >> c) & 1):
                    total += 1
    return total


def count_k3(int n, rows):
    cdef uint64_t r[64]
    cdef int a, b
    cdef int64_t total = 0
    _load(rows, n, r)
    with nogil:
        for a in range(n):
            for b in range(a + 1, n):
                if (r[a] >> b) & 1:
                    total += popc(((r[a] & r[b]) >> b) >> 1)
    return total


def count_k4(int n, rows):
    cdef uint64_t r[64]
    cdef int a, b, c
    cdef uint64_t common
    cdef int64_t total = 0
    _load(rows, n, r)
    with nogil:
        for a in range(n):
            for b in range(a + 1, n):
                if not ((r[a] >> b) & 1):
                    continue
                common = (((r[a] & r[b]) >> b) >> 1) << (b + 1) if b < 63 else 0
                while common:
                    c = __builtin_ctzll(common)
                    common &= common - 1
                    total += popc(common & r[c])
    return total


cdef struct RealState:
    int n
    int res[64]
    uint64_t rows[64]


cdef bint _feasible(RealState* st, int v) nogil:
    cdef int room = st.n - v - 1
    cdef int w, total = 0
    for w in range(v, st.n):
        if st.res[w] > room:
            return False
        total += st.res[w]
    return (total & 1) == 0


cdef int _rec(RealState* st, int v, list out, Py_ssize_t cap) except -2:
    # returns 0 to continue, 1 when the cap was exceeded
    cdef int n = st.n
    cdef int need, ncand, i, k, u, flag
    cdef int cand[64]
    cdef int idx[64]
    if v == n:
        out.append(tuple([int(st.rows[i]) for i in range(n)]))
        return 1 if len(out) > cap else 0
    need = st.res[v]
    ncand = 0
    for u in range(v + 1, n):
        if st.res[u] > 0:
            cand[ncand] = u
            ncand += 1
    if need > ncand:
        return 0
    for i in range(need):
        idx[i] = i
    while True:
        for i in range(need):
            u = cand[idx[i]]
            st.res[u] -= 1
            st.rows[v] |= bit(u)
            st.rows[u] |= bit(v)
        st.res[v] = 0
        flag = 0
        if _feasible(st, v + 1):
            flag = _rec(st, v + 1, out, cap)
        for i in range(need):
            u = cand[idx[i]]
            st.res[u] += 1
            st.rows[v] &= ~bit(u)
            st.rows[u] &= ~bit(v)
        st.res[v] = need
        if flag:
            return 1
        # next combination in lexicographic order
        k = need - 1
        while k >= 0 and idx[k] == ncand - need + k:
            k -= 1
        if k < 0:
            break
        idx[k] += 1
        for i in range(k + 1, need):
            idx[i] = idx[i - 1] + 1
    return 0


def realizations(degrees, cap):
    cdef RealState st
    cdef int i
    cdef int n = len(degrees)
    if n > 64:
        raise ValueError("compiled kernels support n <= 64")
    st.n = n
    for i in range(n):
        st.res[i] = degrees[i]
        st.rows[i] = 0
    out = []
    if _rec(&st, 0, out, cap):
        return None
    return out
