"""Labeled simple graphs stored as adjacency bit-rows.

Vertices are the integers ``0..n-1``. Row ``v`` is a Python int whose bit
``u`` is set iff ``uv`` is an edge, so rows are arbitrarily wide and the same
code covers small and large ``n``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import GraphFormatError, NotGraphicalError

INF = math.inf


def bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class Graph:
    """Immutable labeled simple graph.

    Use :meth:`from_edges` or :meth:`from_rows` rather than the raw
    constructor when the rows come from untrusted input; both validate
    symmetry and the absence of loops.
    """

    n: int
    rows: tuple
    m: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "m", sum(popcount(r) for r in self.rows) // 2)

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[int]) -> "Graph":
        rows = tuple(int(r) for r in rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full:
                raise ValueError(f"row {v} has bits outside 0..{n - 1}")
            if (r >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in bits(r):
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        return cls(n, rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(popcount(r) for r in self.rows)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, r in enumerate(self.rows):
            for v in bits(r >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def edge_set(self) -> frozenset:
        return frozenset(self.edges())

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return format_edge_list(self)


@dataclass(frozen=True)
class DegreeSequence:
    """Labeled degree sequence ``(d_0, ..., d_{n-1})``."""

    degrees: tuple

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        n = len(degrees)
        for d in degrees:
            if d < 0:
                raise ValueError(f"negative degree {d}")
            if d > max(n - 1, 0):
                raise NotGraphicalError(f"degree {d} exceeds n-1={n - 1}")
        if sum(degrees) % 2:
            raise NotGraphicalError(f"degree sum {sum(degrees)} is odd")

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse a comma/space separated list such as ``"2,2,2,1,1"``."""
        tokens = [t for t in text.replace(",", " ").split() if t]
        try:
            return cls(tuple(int(t) for t in tokens))
        except ValueError as exc:
            if isinstance(exc, NotGraphicalError):
                raise
            raise GraphFormatError(f"bad degree sequence {text!r}") from exc

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def compact(self) -> list[tuple[int, int]]:
        """``[(degree, multiplicity), ...]`` with degrees decreasing."""
        counts = Counter(self.degrees)
        return sorted(counts.items(), reverse=True)

    @property
    def sum_squares(self) -> int:
        return sum(d * d for d in self.degrees)

    @property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def dual(self) -> "DegreeSequence":
        return dual_sequence(self)

    def sorted(self) -> "DegreeSequence":
        return DegreeSequence(tuple(sorted(self.degrees, reverse=True)))

    def compact_str(self) -> str:
        return " ".join(f"{d}^{a}" for d, a in self.compact)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __getitem__(self, i):
        return self.degrees[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.degrees))


# --------------------------------------------------------------- constructors


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> Graph:
    """``K_{1,k}`` with hub 0."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def matching_graph(m: int, isolated: int = 0) -> Graph:
    """``m K_2`` plus ``isolated`` isolated vertices."""
    return Graph.from_edges(2 * m + isolated, [(2 * i, 2 * i + 1) for i in range(m)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -------------------------------------------------------------- serialization


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n; u-v,u-v,..."`` (whitespace-insensitive)."""
    compact = "".join(text.split())
    if ";" not in compact:
        raise GraphFormatError("edge list needs 'n;' prefix", text)
    head, _, body = compact.partition(";")
    try:
        n = int(head)
    except ValueError:
        raise GraphFormatError("bad vertex count", head) from None
    if n < 0:
        raise GraphFormatError("negative vertex count", head)
    rows = [0] * n
    for token in filter(None, body.split(",")):
        parts = token.split("-")
        if len(parts) != 2:
            raise GraphFormatError("malformed edge", token)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("malformed edge", token) from None
        if u >= n or v >= n or u < 0 or v < 0:
            raise GraphFormatError(f"vertex index out of range for n={n}", token)
        if u == v:
            raise GraphFormatError("loop edge", token)
        if (rows[u] >> v) & 1:
            raise GraphFormatError("duplicate edge", token)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def format_edge_list(g: Graph) -> str:
    return f"{g.n}; " + ",".join(f"{u}-{v}" for u, v in g.edges())


def _g6_encode_n(n: int) -> str:
    if n < 63:
        return chr(63 + n)
    if n < 258048:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """Encode ``g`` in graph6 (no header)."""
    out = [_g6_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        rj = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise GraphFormatError("empty graph6 string", text)
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError("invalid graph6 character", ch)
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] != 63:
        if len(vals) < 4:
            raise GraphFormatError("truncated graph6 size", text)
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise GraphFormatError("truncated graph6 size", text)
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    need = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (need + 5) // 6:
        raise GraphFormatError(f"graph6 body has wrong length for n={n}", text)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if need % 6 and body[-1] & ((1 << (6 - need % 6)) - 1):
        raise GraphFormatError("nonzero graph6 padding bits", text)
    return Graph(n, tuple(rows))


def parse_graph(text: str) -> Graph:
    """Parse either the edge-list format (contains ``;``) or graph6."""
    if ";" in text:
        return parse_edge_list(text)
    return parse_graph6(text)


def read_graphs(path) -> list[Graph]:
    """Read one graph per non-blank, non-comment line."""
    graphs = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                graphs.append(parse_graph(line))
    return graphs


# ----------------------------------------------------------------- operations


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph on ``vertices``, relabeled ``0..k-1`` in sorted order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    rows = []
    for v in vs:
        r = g.rows[v]
        rows.append(sum(1 << i for i, u in enumerate(vs) if (r >> u) & 1))
    return Graph(len(vs), tuple(rows))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    rows = [0] * g.n
    for v, r in enumerate(g.rows):
        pv = perm[v]
        for u in bits(r):
            rows[pv] |= 1 << perm[u]
    return Graph(g.n, tuple(rows))


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(g.degrees)


def dual_sequence(s: DegreeSequence) -> DegreeSequence:
    n = len(s)
    return DegreeSequence(tuple(n - 1 - d for d in s.degrees))


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def distances_from(g: Graph, source: int) -> list:
    """BFS distances from ``source``; unreachable vertices get ``INF``."""
    dist: list = [INF] * g.n
    dist[source] = 0
    seen = frontier = 1 << source
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in bits(frontier):
            nxt |= g.rows[u]
        frontier = nxt & ~seen
        seen |= frontier
        for u in bits(frontier):
            dist[u] = d
    return dist


def eccentricity(g: Graph, v: int):
    return max(distances_from(g, v))


def diameter(g: Graph):
    if g.n == 0:
        return 0
    return max(eccentricity(g, v) for v in range(g.n))


def girth(g: Graph):
    """Length of a shortest cycle, ``INF`` for forests."""
    best = INF
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = [root]
        for u in queue:
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(g.rows[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(components(g))


def is_tree(g: Graph) -> bool:
    return g.n > 0 and g.m == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.n > 0 and g.m == g.n and is_connected(g)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """``g1`` on ``0..n1-1`` and ``g2`` shifted to ``n1..n1+n2-1``."""
    shift = g1.n
    return Graph(g1.n + g2.n, g1.rows + tuple(r << shift for r in g2.rows))


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    left = ((1 << n2) - 1) << n1
    right = (1 << n1) - 1
    rows = tuple(r | left for r in g1.rows) + tuple((r << n1) | right for r in g2.rows)
    return Graph(n1 + n2, rows)


def edge_pairs_disjoint(g: Graph) -> Iterator[tuple[tuple[int, int], tuple[int, int]]]:
    """Unordered pairs of vertex-disjoint edges."""
    for e, f in combinations(g.edges(), 2):
        if e[0] not in f and e[1] not in f:
            yield e, f
