"""Order-4 census, small subgraph counters, trace identities and Zagreb indices.

Counting conventions: ``p4``, ``c4``, ``k3`` and ``k4`` count subgraphs (not
necessarily induced) isomorphic to ``P4``, ``C4``, ``K3`` and ``K4``. The
census counts *induced* copies of each of the eleven graphs on four vertices.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

from . import kernels
from ._tables import CLASS_NAMES
from .graph import DegreeSequence, Graph, girth
from .switch import two_switch_degree


@dataclass(frozen=True)
class Census4:
    """Induced counts of the eleven graphs of order four.

    Field names follow the customary drawing: ``U4`` is the paw, ``D4`` the
    diamond, ``S4`` the claw, and a ``_bar`` suffix marks the complement
    (``S4_bar`` is a triangle plus an isolated vertex).
    """

    K4_bar: int = 0
    D4_bar: int = 0
    two_K2: int = 0
    U4_bar: int = 0
    P4: int = 0
    S4: int = 0
    S4_bar: int = 0
    U4: int = 0
    C4: int = 0
    D4: int = 0
    K4: int = 0

    @property
    def total(self) -> int:
        return sum(asdict(self).values())

    def to_dict(self) -> dict:
        return dict(zip(CLASS_NAMES, asdict(self).values()))


@dataclass(frozen=True)
class CountSummary:
    dpe: int
    p4: int
    c4: int
    k3: int
    k4: int
    zagreb1: int
    zagreb2: int

    def to_dict(self) -> dict:
        return asdict(self)


def census4(g: Graph) -> Census4:
    return Census4(*kernels.census4(g.n, g.rows))


def _check_nonneg(value: int, what: str) -> int:
    if value < 0:
        raise OverflowError(f"{what} went negative ({value})")
    return value


def dpe_from_sequence(s: DegreeSequence) -> int:
    """Disjoint edge pairs from the degree sequence alone."""
    m = s.edge_count
    return _check_nonneg(comb(m, 2) - sum(comb(d, 2) for d in s.degrees), "dpe")


def dpe_direct(g: Graph) -> int:
    """Disjoint edge pairs counted pair by pair."""
    edges = g.edges()
    total = 0
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if c != a and c != b and d != a and d != b:
                total += 1
    return total


def dpe(g: Graph) -> int:
    return dpe_from_sequence(DegreeSequence(g.degrees))


def subgraph_counts(g: Graph) -> tuple[int, int, int]:
    """``(p4, c4, k4)`` by scanning every 4-set."""
    return tuple(kernels.subgraph_counts4(g.n, g.rows))


def count_k3(g: Graph) -> int:
    return kernels.count_k3(g.n, g.rows)


def count_k4(g: Graph) -> int:
    return kernels.count_k4(g.n, g.rows)


def edge_product_sum(g: Graph) -> int:
    """Sum over edges ``uv`` of ``(d_u - 1)(d_v - 1)``."""
    deg = g.degrees
    return sum((deg[u] - 1) * (deg[v] - 1) for u, v in g.edges())


def p4_k3_identity(g: Graph) -> tuple[int, int]:
    """Direct ``(p4, k3)``; raises if ``p4 + 3 k3`` misses the edge-product sum."""
    p4 = subgraph_counts(g)[0]
    k3 = count_k3(g)
    rhs = edge_product_sum(g)
    if p4 + 3 * k3 != rhs:
        raise AssertionError(f"p4 + 3k3 = {p4 + 3 * k3} but edge sum is {rhs}")
    return p4, k3


# -------------------------------------------------------------- trace routes


def _square(g: Graph) -> list[list[int]]:
    """Entries of ``A^2``: common-neighbour counts."""
    n = g.n
    rows = g.rows
    return [[bin(rows[i] & rows[j]).count("1") for j in range(n)] for i in range(n)]


def trace_power(g: Graph, k: int) -> int:
    """``tr(A^k)`` by repeated integer matrix multiplication."""
    n = g.n
    a = [[(g.rows[i] >> j) & 1 for j in range(n)] for i in range(n)]
    p = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(k):
        p = [[sum(p[i][t] * a[t][j] for t in range(n) if p[i][t]) for j in range(n)] for i in range(n)]
    return sum(p[i][i] for i in range(n))


def k3_trace(g: Graph) -> int:
    t = trace_power(g, 3)
    if t % 6:
        raise AssertionError(f"tr(A^3) = {t} not divisible by 6")
    return t // 6


def c4_trace(g: Graph) -> int:
    """Half the sum over vertex pairs of ``C([A^2]_ij, 2)``."""
    sq = _square(g)
    total = sum(comb(sq[i][j], 2) for i in range(g.n) for j in range(i + 1, g.n))
    if total % 2:
        raise AssertionError("odd common-neighbour pair total")
    return total // 2


# ----------------------------------------------------------------- Zagreb


def zagreb(g: Graph) -> tuple[int, int]:
    deg = g.degrees
    z1 = sum(d * d for d in deg)
    z2 = sum(deg[u] * deg[v] for u, v in g.edges())
    return z1, z2


def count_summary(g: Graph) -> CountSummary:
    p4, c4, k4 = subgraph_counts(g)
    z1, z2 = zagreb(g)
    return CountSummary(dpe=dpe(g), p4=p4, c4=c4, k3=count_k3(g), k4=k4, zagreb1=z1, zagreb2=z2)


# -------------------------------------------------------- closed-form degree


def degree_formula(g: Graph) -> int:
    """2-switch-degree in closed form: ``2 dpe + 2 c4 - p4``.

    The published version carries an extra ``-4 k4``; that term comes from
    miscounting the paths inside ``K4`` (there are 12, not 8) and makes the
    value negative on ``K4`` itself. See :func:`published_degree_formula`.
    """
    p4, c4, _ = subgraph_counts(g)
    return 2 * dpe(g) + 2 * c4 - p4


def published_degree_formula(g: Graph) -> int:
    """``2 dpe + 2 c4 - p4 - 4 k4`` exactly as published (wrong when ``k4 > 0``)."""
    p4, c4, k4 = subgraph_counts(g)
    return 2 * dpe(g) + 2 * c4 - p4 - 4 * k4


def degree_from_census(c: Census4) -> int:
    return 2 * c.two_K2 + 2 * c.C4 + c.P4


def census_relations(c: Census4) -> dict[str, int]:
    """``c4``, ``p4`` and ``dpe`` recovered from induced counts.

    Each 4-set contributes its own number of C4 / P4 / 2K2 subgraphs: a
    diamond holds one 4-cycle and six paths, ``K4`` three 4-cycles, twelve
    paths and three disjoint edge pairs, and so on.
    """
    return {
        "c4": c.D4 + c.C4 + 3 * c.K4,
        "p4": 4 * c.C4 + c.P4 + 2 * c.U4 + 6 * c.D4 + 12 * c.K4,
        "dpe": 2 * c.C4 + c.P4 + c.two_K2 + c.U4 + 2 * c.D4 + 3 * c.K4,
    }


@dataclass(frozen=True)
class ZagrebCheck:
    lhs: int
    rhs: int
    girth_at_least_5: bool

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def degree_zagreb_relation(g: Graph, degree: int | None = None) -> ZagrebCheck:
    """Check ``deg + zeta2 = m^2 + 2 c4 + 3 k3``.

    For girth at least five the right side collapses to ``m^2``. ``degree``
    may be passed in to avoid re-enumerating switches.
    """
    if degree is None:
        degree = two_switch_degree(g)
    _, z2 = zagreb(g)
    _, c4, _ = subgraph_counts(g)
    k3 = count_k3(g)
    lhs = degree + z2
    rhs = g.m * g.m + 2 * c4 + 3 * k3
    return ZagrebCheck(lhs, rhs, girth(g) >= 5)


def published_zagreb_rhs(g: Graph) -> int:
    """``m^2 + 2 c4 + 3 k3 - 4 k4`` as published."""
    _, c4, k4 = subgraph_counts(g)
    return g.m * g.m + 2 * c4 + 3 * count_k3(g) - 4 * k4
