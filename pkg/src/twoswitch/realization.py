"""Realization graphs: every labeled realization of a degree sequence, joined
by single 2-switches.

These are brute-force objects meant as ground truth for the closed formulas,
so enumeration is capped (``n <= 12`` and ``10**6`` realizations by default).
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from . import kernels
from .errors import CapExceededError, NotGraphicalError
from .graph import (
    DegreeSequence,
    Graph,
    bits,
    complement,
    induced_subgraph,
    is_connected,
    is_forest,
    is_tree,
    is_unicyclic,
    popcount,
    to_graph6,
)
from .switch import _rows_apply, active_mask, inactive_edges

MAX_N = 12
MAX_REALIZATIONS = 10**6

FILTERS: dict[str, Callable[[Graph], bool]] = {
    "all": lambda g: True,
    "forests": is_forest,
    "trees": is_tree,
    "unicyclic": is_unicyclic,
    "connected": is_connected,
}


def _as_sequence(s) -> DegreeSequence:
    if isinstance(s, DegreeSequence):
        return s
    if isinstance(s, str):
        return DegreeSequence.parse(s)
    return DegreeSequence(tuple(s))


def is_graphical(s) -> bool:
    """Erdos-Gallai test."""
    try:
        s = _as_sequence(s)
    except NotGraphicalError:
        return False
    d = sorted(s.degrees, reverse=True)
    n = len(d)
    total = 0
    for k in range(1, n + 1):
        total += d[k - 1]
        if total > k * (k - 1) + sum(min(x, k) for x in d[k:]):
            return False
    return True


def graphical_sequences(n: int) -> Iterator[DegreeSequence]:
    """Non-increasing graphical sequences of length ``n``."""

    def rec(prefix, hi):
        if len(prefix) == n:
            if sum(prefix) % 2 == 0 and is_graphical(prefix):
                yield DegreeSequence(tuple(prefix))
            return
        for d in range(hi, -1, -1):
            yield from rec(prefix + [d], d)

    yield from rec([], max(n - 1, 0))


def tree_sequences(n: int) -> Iterator[DegreeSequence]:
    """Non-increasing degree sequences of trees on ``n >= 2`` vertices."""
    for s in graphical_sequences(n):
        if sum(s.degrees) == 2 * (n - 1) and min(s.degrees) >= 1:
            yield s


def unicyclic_sequences(n: int) -> Iterator[DegreeSequence]:
    """Non-increasing sequences with a connected unicyclic realization."""
    for s in graphical_sequences(n):
        if sum(s.degrees) == 2 * n and min(s.degrees) >= 1 and max(s.degrees) >= 2:
            yield s


def enumerate_realizations(
    s,
    cap: int = MAX_REALIZATIONS,
    *,
    max_n: int = MAX_N,
) -> list[Graph]:
    """All labeled graphs with degree sequence ``s``, in lexicographic order.

    Raises
    ------
    NotGraphicalError
        If ``s`` has no realization.
    CapExceededError
        If ``len(s) > max_n`` or there are more than ``cap`` realizations.
    """
    s = _as_sequence(s)
    if s.n > max_n:
        raise CapExceededError(f"n={s.n} exceeds the realization cap n<={max_n}")
    if not is_graphical(s):
        raise NotGraphicalError(f"{s} is not graphical")
    rows = kernels.realizations(s.degrees, cap)
    if rows is None:
        raise CapExceededError(f"more than {cap} realizations of {s}")
    return [Graph(s.n, r) for r in rows]


def one_switch_apart(g: Graph, h: Graph) -> bool:
    """True iff ``h = t(g)`` for some active 2-switch ``t``.

    For equal degree sequences this holds exactly when the edge sets differ
    in four edges, two on each side.
    """
    if g.n != h.n or g.degrees != h.degrees:
        return False
    diff = sum(popcount(a ^ b) for a, b in zip(g.rows, h.rows)) // 2
    return diff == 4


@dataclass
class RealizationGraph:
    """Metagraph over realizations; ``edges`` are index pairs ``i < j``."""

    sequence: DegreeSequence
    vertices: list
    edges: list
    filter_name: str = "all"
    adjacency: list = field(init=False, repr=False)
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.adjacency = [[] for _ in self.vertices]
        for i, j in self.edges:
            self.adjacency[i].append(j)
            self.adjacency[j].append(i)
        for adj in self.adjacency:
            adj.sort()
        self._index = {g.rows: i for i, g in enumerate(self.vertices)}

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, g: Graph) -> int:
        return self._index[g.rows]

    def __contains__(self, g: Graph) -> bool:
        return g.rows in self._index

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def degree_profile(self) -> dict[int, int]:
        return dict(sorted(Counter(self.degrees()).items()))

    def is_regular(self) -> bool:
        return len(set(self.degrees())) <= 1

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j in self.adjacency[i]:
                if j not in seen:
                    seen.add(j)
                    queue.append(j)
        return len(seen) == len(self.vertices)

    def summary(self) -> dict:
        return {
            "sequence": list(self.sequence.degrees),
            "filter": self.filter_name,
            "vertices": len(self.vertices),
            "edges": len(self.edges),
            "degree_profile": {str(k): v for k, v in self.degree_profile().items()},
            "connected": self.is_connected(),
            "regular": self.is_regular(),
        }

    def to_json(self) -> str:
        return json.dumps(
            {
                "vertices": [to_graph6(g) for g in self.vertices],
                "edges": [list(e) for e in self.edges],
            },
            separators=(",", ":"),
        )

    def to_dot(self) -> str:
        lines = ["graph realizations {"]
        for i, g in enumerate(self.vertices):
            label = to_graph6(g).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {i} [label="{label}"];')
        for i, j in self.edges:
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _resolve_filter(filter) -> tuple[str, Callable[[Graph], bool]]:
    if filter is None:
        return "all", FILTERS["all"]
    if callable(filter):
        return getattr(filter, "__name__", "custom"), filter
    try:
        return filter, FILTERS[filter]
    except KeyError:
        raise ValueError(f"unknown filter {filter!r}; choose from {sorted(FILTERS)}") from None


def build_realization_graph(
    s,
    filter="all",
    *,
    cap: int = MAX_REALIZATIONS,
    max_n: int = MAX_N,
    method: str = "hash",
    realizations: Sequence[Graph] | None = None,
) -> RealizationGraph:
    """Realization graph of ``s``, restricted to realizations passing ``filter``.

    ``method="hash"`` applies every active switch and looks the result up;
    ``method="pairwise"`` compares every pair of realizations instead and is
    kept as an independent cross-check for small sequences.
    """
    s = _as_sequence(s)
    name, keep = _resolve_filter(filter)
    if realizations is None:
        realizations = enumerate_realizations(s, cap, max_n=max_n)
    verts = [g for g in realizations if keep(g)]
    index = {g.rows: i for i, g in enumerate(verts)}
    edges = set()
    if method == "hash":
        for i, g in enumerate(verts):
            for q in kernels.active_switches(g.n, g.rows):
                j = index.get(_rows_apply(g.rows, *q))
                if j is not None and i < j:
                    edges.add((i, j))
    elif method == "pairwise":
        for i, g in enumerate(verts):
            for j in range(i + 1, len(verts)):
                if one_switch_apart(g, verts[j]):
                    edges.add((i, j))
    else:
        raise ValueError(f"unknown method {method!r}")
    return RealizationGraph(s, verts, sorted(edges), name)


@dataclass(frozen=True)
class DualCheck:
    isomorphism: bool
    vertices: int
    edges: int
    dual_edges: int


def verify_dual_isomorphism(s, *, cap: int = MAX_REALIZATIONS, max_n: int = 10) -> DualCheck:
    """Check that complementation maps the realization graph of ``s`` onto that of its dual.

    The map must be a bijection on vertices and send edges to edges and
    non-edges to non-edges; edge counts then agree automatically.
    """
    s = _as_sequence(s)
    if s.n > max_n:
        raise CapExceededError(f"n={s.n} exceeds dual-check cap {max_n}")
    x = build_realization_graph(s, cap=cap)
    y = build_realization_graph(s.dual(), cap=cap)
    image = [y._index.get(complement(g).rows) for g in x.vertices]
    ok = None not in image and len(set(image)) == len(y.vertices) == len(x.vertices)
    if ok:
        mapped = {tuple(sorted((image[i], image[j]))) for i, j in x.edges}
        ok = mapped == set(y.edges)
    return DualCheck(ok, len(x.vertices), len(x.edges), len(y.edges))


@dataclass
class ActiveSpace:
    """The realization graph with every member replaced by its active part."""

    space: RealizationGraph
    active_vertices: tuple
    inactive_edges: frozenset
    consistent_activity: bool
    consistent_inactive_edges: bool
    isomorphism: bool


def active_space(x: RealizationGraph) -> ActiveSpace:
    """Apply ``G -> G*`` to every vertex of ``x`` and check the result.

    Verifies that all members share one active vertex set and one set of
    edges touching inactive vertices, that the map is injective, and that two
    members are one switch apart exactly when their active parts are.
    """
    masks = {active_mask(g) for g in x.vertices}
    consistent = len(masks) <= 1
    mask = masks.pop() if masks else 0
    act = tuple(bits(mask))
    e0s = {inactive_edges(g) for g in x.vertices}
    consistent_e0 = len(e0s) <= 1
    e0 = next(iter(e0s)) if e0s else frozenset()

    parts = [induced_subgraph(g, act) for g in x.vertices]
    seq = DegreeSequence(parts[0].degrees if parts else ())
    injective = len({p.rows for p in parts}) == len(parts)
    edge_set = set(x.edges)
    star_edges = []
    iso = injective
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            adjacent = one_switch_apart(parts[i], parts[j])
            if adjacent:
                star_edges.append((i, j))
            if adjacent != ((i, j) in edge_set):
                iso = False
    star = RealizationGraph(seq, parts, star_edges, x.filter_name)
    return ActiveSpace(star, act, e0, consistent, consistent_e0, iso)
