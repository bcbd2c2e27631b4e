"""Exhaustive and random generators for small graphs.

``nonisomorphic_graphs`` builds one canonical representative per
isomorphism class by adding a vertex to every representative on ``n-1``
vertices in all possible ways and keeping candidates whose canonical form
has not been seen. The canonical form is the least upper-triangle bit string
over all labelings compatible with an equitable degree refinement.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .graph import Graph, bits, relabel


def _refine(g: Graph) -> list[list[int]]:
    """Ordered equitable partition starting from the degree partition."""
    n = g.n
    color = [bin(r).count("1") for r in g.rows]
    while True:
        keys = [
            (color[v], tuple(sorted(color[u] for u in bits(g.rows[v]))))
            for v in range(n)
        ]
        ranked = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [ranked[keys[v]] for v in range(n)]
        if len(set(new)) == len(set(color)):
            color = new
            break
        color = new
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(color[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _code(g: Graph, order: tuple) -> int:
    """Upper-triangle adjacency bits of ``g`` read in vertex order ``order``."""
    code = 0
    rows = g.rows
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            code = (code << 1) | ((rj >> order[i]) & 1)
    return code


def canonical_form(g: Graph) -> Graph:
    """Canonical relabeling of ``g``: isomorphic graphs map to equal graphs."""
    cells = _refine(g)
    best_code = None
    best_order = None
    for choice in product(*(permutations(c) for c in cells)):
        order = tuple(v for cell in choice for v in cell)
        code = _code(g, order)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    perm = [0] * g.n
    for pos, v in enumerate(best_order):
        perm[v] = pos
    return relabel(g, perm)


def certificate(g: Graph) -> tuple:
    return canonical_form(g).rows


@lru_cache(maxsize=None)
def _reps(n: int) -> tuple:
    if n == 0:
        return (Graph(0, ()),)
    seen = {}
    for base in _reps(n - 1):
        for mask in range(1 << (n - 1)):
            rows = list(base.rows) + [mask]
            for u in bits(mask):
                rows[u] |= 1 << (n - 1)
            cand = canonical_form(Graph(n, tuple(rows)))
            seen.setdefault(cand.rows, cand)
    return tuple(sorted(seen.values(), key=lambda h: (h.m, h.rows)))


def nonisomorphic_graphs(n: int) -> tuple:
    """One canonical representative per isomorphism class on ``n`` vertices."""
    if n > 8:
        raise ValueError("canonical generation is limited to n <= 8")
    return _reps(n)


def graphs_up_to(max_n: int, min_n: int = 0) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from nonisomorphic_graphs(n)


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (``2^C(n,2)`` of them)."""
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k in bits(mask):
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        yield Graph(n, tuple(rows))


def threshold_graph(creation: str) -> Graph:
    """Graph from a creation string over ``{'i', 'd'}`` (isolated / dominating).

    The first character is ignored (the first vertex is both).
    """
    rows: list[int] = []
    for v, ch in enumerate(creation):
        if v and ch == "d":
            for u in range(v):
                rows[u] |= 1 << v
            rows.append((1 << v) - 1)
        elif ch in "id":
            rows.append(0)
        else:
            raise ValueError(f"creation symbol must be 'i' or 'd', got {ch!r}")
    return Graph(len(rows), tuple(rows))


def threshold_graphs(n: int) -> Iterator[Graph]:
    """All labeled threshold graphs given by creation strings of length ``n``."""
    if n == 0:
        yield Graph(0, ())
        return
    for tail in product("id", repeat=n - 1):
        yield threshold_graph("i" + "".join(tail))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    rows = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def random_tree(n: int, rng: random.Random) -> Graph:
    """Uniform labeled tree via a random Pruefer code."""
    if n <= 1:
        return Graph(n, (0,) * n)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in code:
        degree[x] += 1
    edges = []
    for x in code:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(n) if degree[v] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)
