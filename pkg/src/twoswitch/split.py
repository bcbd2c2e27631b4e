"""Split graphs: recognition, bipartitions, swing vertices, composition and primality.

Vertex sets are Python ``frozenset`` objects in the public API; internally
they are bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import CapExceededError
from .graph import Graph, bits, induced_subgraph, popcount
from .switch import ActivityReport, active_mask

DECOMPOSITION_MAX_N = 12


def _mask(vs) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class SplitBipartition:
    """A clique ``clique`` and an independent set ``independent`` covering ``V``."""

    clique: frozenset
    independent: frozenset

    @classmethod
    def from_masks(cls, k: int, i: int) -> "SplitBipartition":
        return cls(frozenset(bits(k)), frozenset(bits(i)))

    @property
    def k_mask(self) -> int:
        return _mask(self.clique)

    @property
    def i_mask(self) -> int:
        return _mask(self.independent)

    def is_valid_for(self, g: Graph) -> bool:
        return _valid(g, self.k_mask, self.i_mask)

    def to_list(self) -> list:
        return [sorted(self.clique), sorted(self.independent)]

    def sort_key(self):
        return (-len(self.clique), sorted(self.clique))


def _valid(g: Graph, k: int, i: int) -> bool:
    if k & i or (k | i) != (1 << g.n) - 1:
        return False
    rows = g.rows
    for v in bits(k):
        if (k & ~(1 << v)) & ~rows[v]:
            return False
    for v in bits(i):
        if rows[v] & i:
            return False
    return True


# ----------------------------------------------------------------- recognition


@dataclass(frozen=True)
class SplitTest:
    """Result of :func:`is_split`; ``witness`` is an induced C4, C5 or 2K2 when not split."""

    is_split: bool
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.is_split


def _degree_split(g: Graph):
    """Hammer-Simeone test; returns the candidate ``(K, I)`` masks or ``None``."""
    deg = g.degrees
    order = sorted(range(g.n), key=lambda v: (-deg[v], v))
    d = [deg[v] for v in order]
    m = 0
    for i, x in enumerate(d, start=1):
        if x >= i - 1:
            m = i
    if sum(d[:m]) != m * (m - 1) + sum(d[m:]):
        return None
    k = _mask(order[:m])
    return k, ((1 << g.n) - 1) & ~k


def _induced_edges(rows, vs) -> int:
    return sum(popcount(rows[v] & _mask(vs)) for v in vs) // 2


def _forbidden_witness(g: Graph) -> tuple:
    rows = g.rows
    for q in combinations(range(g.n), 4):
        if _induced_edges(rows, q) in (2, 4):
            degs = [popcount(rows[v] & _mask(q)) for v in q]
            if all(x == 1 for x in degs) or all(x == 2 for x in degs):
                return q
    for q in combinations(range(g.n), 5):
        if _induced_edges(rows, q) == 5 and all(popcount(rows[v] & _mask(q)) == 2 for v in q):
            return q
    raise AssertionError("degree test rejected a graph with no forbidden subgraph")


def is_split(g: Graph) -> SplitTest:
    """Split-graph recognition by the degree-sequence test.

    On failure the witness is the vertex set of an induced ``C4``, ``2K2`` or
    ``C5``; such a set always exists for non-split graphs.
    """
    if _degree_split(g) is not None:
        return SplitTest(True)
    return SplitTest(False, _forbidden_witness(g))


def bipartitions(g: Graph) -> list[SplitBipartition]:
    """Every ``(K, I)`` bipartition of a split graph, largest clique first.

    All bipartitions arise from one of them by moving at most one vertex in
    each direction, so only ``O(n^2)`` candidates are validated.

    Raises
    ------
    ValueError
        If ``g`` is not split.
    """
    base = _degree_split(g)
    if base is None:
        raise ValueError("graph is not split")
    k0, i0 = base
    cands = {(k0, i0)}
    for v in bits(k0):
        cands.add((k0 & ~(1 << v), i0 | (1 << v)))
    for u in bits(i0):
        cands.add((k0 | (1 << u), i0 & ~(1 << u)))
        for v in bits(k0):
            cands.add(((k0 & ~(1 << v)) | (1 << u), (i0 & ~(1 << u)) | (1 << v)))
    found = [SplitBipartition.from_masks(k, i) for k, i in cands if _valid(g, k, i)]
    return sorted(found, key=SplitBipartition.sort_key)


def bipartitions_bruteforce(g: Graph) -> list[SplitBipartition]:
    """Subset search over all ``2^n`` clique candidates (cross-check, ``n <= 16``)."""
    if g.n > 16:
        raise CapExceededError("subset search limited to n <= 16")
    full = (1 << g.n) - 1
    found = [
        SplitBipartition.from_masks(k, full & ~k)
        for k in range(1 << g.n)
        if _valid(g, k, full & ~k)
    ]
    return sorted(found, key=SplitBipartition.sort_key)


def canonical_bipartition(g: Graph) -> SplitBipartition:
    return bipartitions(g)[0]


def swing_vertices(g: Graph, bip: SplitBipartition) -> frozenset:
    """Vertices ``w`` with ``N(w) = K - w``."""
    k = bip.k_mask
    return frozenset(w for w in range(g.n) if g.rows[w] == k & ~(1 << w))


def universal_vertices(g: Graph) -> frozenset:
    full = (1 << g.n) - 1
    return frozenset(v for v in range(g.n) if g.rows[v] == full & ~(1 << v))


@dataclass(frozen=True)
class SplitAnalysis:
    """``swing`` is taken relative to the first (largest-clique) bipartition."""

    bipartitions: tuple
    balanced: bool
    swing: frozenset
    universal: frozenset

    def to_dict(self) -> dict:
        return {
            "bipartitions": [b.to_list() for b in self.bipartitions],
            "balanced": self.balanced,
            "swing": sorted(self.swing),
            "universal": sorted(self.universal),
        }


def analyze_split(g: Graph) -> SplitAnalysis:
    bips = tuple(bipartitions(g))
    return SplitAnalysis(
        bipartitions=bips,
        balanced=len(bips) == 1,
        swing=swing_vertices(g, bips[0]),
        universal=universal_vertices(g),
    )


# -------------------------------------------------------------------- activity


def _comparable(a: int, b: int) -> bool:
    return a & b == a or a & b == b


def split_active_vertices(g: Graph, bip: SplitBipartition) -> ActivityReport:
    """Activity from neighbourhood comparability in ``S - E(K)``.

    A vertex is inactive exactly when its neighbourhood in ``S - E(K)`` is
    comparable by inclusion with the neighbourhood of every other vertex on
    its side of the bipartition.
    """
    if not bip.is_valid_for(g):
        raise ValueError("not a bipartition of this graph")
    i = bip.i_mask
    nbhd = {v: g.rows[v] & i for v in bip.clique}
    nbhd.update({v: g.rows[v] for v in bip.independent})
    inactive = set()
    for part in (bip.clique, bip.independent):
        for u in part:
            if all(_comparable(nbhd[u], nbhd[v]) for v in part if v != u):
                inactive.add(u)
    inactive = frozenset(inactive)
    return ActivityReport(frozenset(range(g.n)) - inactive, inactive)


def bipartite_part_has_4cycle(g: Graph, bip: SplitBipartition) -> bool:
    """Whether ``S - E(K)`` contains a 4-cycle (two independent vertices with two common neighbours)."""
    ind = sorted(bip.independent)
    return any(popcount(g.rows[a] & g.rows[b]) >= 2 for a, b in combinations(ind, 2))


# ------------------------------------------------------------------ composition


def compose(s: Graph, g: Graph, bip: SplitBipartition | None = None) -> Graph:
    """``S o G``: disjoint union plus every edge from the clique of ``S`` to ``V(G)``.

    The vertices of ``g`` are shifted by ``s.n``, so the two vertex sets are
    disjoint by construction. ``bip`` defaults to the largest-clique
    bipartition of ``s``.
    """
    if bip is None:
        bip = canonical_bipartition(s)
    elif not bip.is_valid_for(s):
        raise ValueError("bip is not a split bipartition of s")
    n1 = s.n
    n = n1 + g.n
    right = ((1 << g.n) - 1) << n1
    k = bip.k_mask
    rows = []
    for v in range(n1):
        rows.append(s.rows[v] | (right if (k >> v) & 1 else 0))
    for v in range(g.n):
        rows.append((g.rows[v] << n1) | k)
    return Graph(n, tuple(rows))


def composed_bipartition(
    s: Graph, bip1: SplitBipartition, bip2: SplitBipartition
) -> SplitBipartition:
    """``(K1 u K2, I1 u I2)`` with the second factor's vertices shifted by ``s.n``."""
    off = s.n
    return SplitBipartition(
        bip1.clique | frozenset(v + off for v in bip2.clique),
        bip1.independent | frozenset(v + off for v in bip2.independent),
    )


@dataclass(frozen=True)
class Decomposition:
    """``G = G[left] o G[right]`` with ``left`` split as ``(clique, independent)``."""

    clique: frozenset
    independent: frozenset
    right: frozenset

    @property
    def left(self) -> frozenset:
        return self.clique | self.independent

    def to_dict(self) -> dict:
        return {
            "clique": sorted(self.clique),
            "independent": sorted(self.independent),
            "right": sorted(self.right),
        }


def find_decomposition(g: Graph, *, max_n: int = DECOMPOSITION_MAX_N) -> Decomposition | None:
    """First decomposition ``G = S o H`` with nonempty split ``S`` and nonempty ``H``.

    Left parts ``A`` are scanned in increasing bitmask order. ``A`` works iff
    every vertex of ``A`` sees all of ``B = V - A`` (those form the clique
    ``K1``) or none of it (the independent set ``I1``), ``K1`` is a clique and
    ``I1`` is independent.
    """
    n = g.n
    if n > max_n:
        raise CapExceededError(f"decomposition search limited to n <= {max_n}")
    full = (1 << n) - 1
    rows = g.rows
    for a in range(1, full):
        b = full & ~a
        k = i = 0
        ok = True
        for v in bits(a):
            hit = rows[v] & b
            if hit == b:
                k |= 1 << v
            elif hit == 0:
                i |= 1 << v
            else:
                ok = False
                break
        if not ok:
            continue
        if any((k & ~(1 << v)) & ~rows[v] for v in bits(k)):
            continue
        if any(rows[v] & i for v in bits(i)):
            continue
        return Decomposition(frozenset(bits(k)), frozenset(bits(i)), frozenset(bits(b)))
    return None


def indecomposable_by_test(g: Graph) -> bool:
    """Sufficient condition for indecomposability of a split graph.

    True when ``g`` is a balanced split graph with no vertex of degree 0, 1
    or ``n - 1`` and ``S - E(K)`` has no 4-cycle. False means "not decided".
    """
    if g.n == 0 or _degree_split(g) is None:
        return False
    bips = bipartitions(g)
    if len(bips) != 1:
        return False
    if any(d in (0, 1, g.n - 1) for d in g.degrees):
        return False
    return not bipartite_part_has_4cycle(g, bips[0])


def is_decomposable(g: Graph, *, max_n: int = DECOMPOSITION_MAX_N) -> bool:
    if indecomposable_by_test(g):
        return False
    return find_decomposition(g, max_n=max_n) is not None


def is_prime(g: Graph, *, max_n: int = DECOMPOSITION_MAX_N) -> bool:
    """Active and indecomposable. The empty graph and ``K1`` are not prime."""
    if g.n == 0 or active_mask(g) != (1 << g.n) - 1:
        return False
    if _degree_split(g) is not None:
        bip = canonical_bipartition(g)
        if min(g.degrees) >= 2 and not bipartite_part_has_4cycle(g, bip):
            return True
    return not is_decomposable(g, max_n=max_n)


def split_factor(g: Graph, d: Decomposition) -> tuple[Graph, SplitBipartition, Graph]:
    """The two factors of a decomposition, relabeled to ``0..``; bipartition in left labels."""
    left = sorted(d.left)
    pos = {v: i for i, v in enumerate(left)}
    bip = SplitBipartition(
        frozenset(pos[v] for v in d.clique), frozenset(pos[v] for v in d.independent)
    )
    return induced_subgraph(g, left), bip, induced_subgraph(g, sorted(d.right))
