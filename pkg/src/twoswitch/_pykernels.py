"""Pure-Python reference implementations of the hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same output (including ordering). ``rows`` is a sequence of
adjacency bit-rows.
"""

from itertools import combinations

from ._tables import CLASS_OF, CYCLES_OF, IS_ACTIVE_PATTERN, PATHS_OF


def _pattern(rows, a, b, c, d):
    ra, rb, rc = rows[a], rows[b], rows[c]
    return (
        ((ra >> b) & 1)
        | (((ra >> c) & 1) << 1)
        | (((ra >> d) & 1) << 2)
        | (((rb >> c) & 1) << 3)
        | (((rb >> d) & 1) << 4)
        | (((rc >> d) & 1) << 5)
    )


def census4(n, rows):
    """Induced counts of the eleven order-4 classes, in ``CLASS_NAMES`` order."""
    counts = [0] * 11
    for a, b, c, d in combinations(range(n), 4):
        counts[CLASS_OF[_pattern(rows, a, b, c, d)]] += 1
    return counts


def subgraph_counts4(n, rows):
    """``(p4, c4, k4)``: P4, C4 and K4 subgraphs (not necessarily induced)."""
    p4 = c4 = k4 = 0
    for a, b, c, d in combinations(range(n), 4):
        pat = _pattern(rows, a, b, c, d)
        p4 += PATHS_OF[pat]
        c4 += CYCLES_OF[pat]
        k4 += pat == 63
    return p4, c4, k4


def active_mask(n, rows):
    """Bitmask of vertices lying in an induced P4, C4 or 2K2."""
    mask = 0
    full = (1 << n) - 1
    for a, b, c, d in combinations(range(n), 4):
        quad = (1 << a) | (1 << b) | (1 << c) | (1 << d)
        if mask & quad == quad:
            continue
        if IS_ACTIVE_PATTERN[_pattern(rows, a, b, c, d)]:
            mask |= quad
            if mask == full:
                break
    return mask


def _canon(a, b, c, d):
    return min((a, b, c, d), (c, d, a, b), (b, a, d, c), (d, c, b, a))


def _edges(n, rows):
    out = []
    for u in range(n):
        r = rows[u] >> (u + 1)
        v = u + 1
        while r:
            if r & 1:
                out.append((u, v))
            r >>= 1
            v += 1
    return out


def active_switches(n, rows):
    """Canonical ``(a, b, c, d)`` tuples of every active 2-switch, sorted."""
    edges = _edges(n, rows)
    out = []
    for i, (a, b) in enumerate(edges):
        ra, rb = rows[a], rows[b]
        for c, d in edges[i + 1:]:
            if c == a or c == b or d == a or d == b:
                continue
            if not (ra >> c) & 1 and not (rb >> d) & 1:
                out.append(_canon(a, b, c, d))
            if not (ra >> d) & 1 and not (rb >> c) & 1:
                out.append(_canon(a, b, d, c))
    out.sort()
    return out


def count_active_switches(n, rows):
    edges = _edges(n, rows)
    total = 0
    for i, (a, b) in enumerate(edges):
        ra, rb = rows[a], rows[b]
        for c, d in edges[i + 1:]:
            if c == a or c == b or d == a or d == b:
                continue
            if not (ra >> c) & 1 and not (rb >> d) & 1:
                total += 1
            if not (ra >> d) & 1 and not (rb >> c) & 1:
                total += 1
    return total


def count_k3(n, rows):
    total = 0
    for a in range(n):
        ra = rows[a]
        for b in range(a + 1, n):
            if (ra >> b) & 1:
                total += bin((ra & rows[b]) >> (b + 1)).count("1")
    return total


def count_k4(n, rows):
    """4-cliques, by intersecting common-neighbour rows along triangles."""
    total = 0
    for a in range(n):
        ra = rows[a]
        for b in range(a + 1, n):
            if not (ra >> b) & 1:
                continue
            common = (ra & rows[b]) >> (b + 1) << (b + 1)
            while common:
                low = common & -common
                c = low.bit_length() - 1
                common ^= low
                total += bin(common & rows[c]).count("1")
    return total


def realizations(degrees, cap):
    """All labeled graphs with the given degrees, as row tuples.

    Vertices are filled in order; vertex ``v`` picks its remaining neighbours
    among higher-numbered vertices in lexicographic combination order.
    Returns ``None`` if more than ``cap`` realizations exist.
    """
    n = len(degrees)
    res = list(degrees)
    rows = [0] * n
    out = []

    def feasible(v):
        room = n - v - 1
        total = 0
        for w in range(v, n):
            if res[w] > room:
                return False
            total += res[w]
        return total % 2 == 0

    def rec(v):
        if v == n:
            out.append(tuple(rows))
            return len(out) <= cap
        need = res[v]
        cand = [u for u in range(v + 1, n) if res[u] > 0]
        if need > len(cand):
            return True
        for combo in combinations(cand, need):
            for u in combo:
                res[u] -= 1
                rows[v] |= 1 << u
                rows[u] |= 1 << v
            res[v] = 0
            ok = True
            if feasible(v + 1):
                ok = rec(v + 1)
            for u in combo:
                res[u] += 1
                rows[v] &= ~(1 << u)
                rows[u] &= ~(1 << v)
            res[v] = need
            if not ok:
                return False
        return True

    if not rec(0):
        return None
    return out
