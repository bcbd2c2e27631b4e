"""Acceptance criteria, each checked exactly (zero tolerance).

Every criterion prints one ``PASS``/``FAIL`` line (collected by
``conftest.py`` into the pytest summary, or printed directly when this file
is run as a script). Two criteria state the degree identity and the Zagreb
relation with an extra ``-4 k4`` term; that term is wrong whenever the graph
contains a ``K4`` (the ``K4`` itself has 12 paths on four vertices, not 8).
Those two criteria are tested literally and are expected to fail; each has a
companion check of the corrected identity, which must pass.
"""

from __future__ import annotations

import functools
import random
import sys
from collections import deque
from math import comb

import pytest

from twoswitch import kernels
from twoswitch.census import dpe
from twoswitch.forests import (
    published_u_degree_formula,
    square_with_tail,
    triangle_with_tail,
    u_degree_by_cases,
    u_degree_direct,
    u_degree_formula,
)
from twoswitch.generate import all_labeled_graphs, graphs_up_to, random_graph
from twoswitch.graph import (
    Graph,
    components,
    cycle_graph,
    diameter,
    eccentricity,
    girth,
    is_connected,
    path_graph,
    petersen_graph,
    to_graph6,
)
from twoswitch.realization import (
    build_realization_graph,
    enumerate_realizations,
    graphical_sequences,
    tree_sequences,
    verify_dual_isomorphism,
)
from twoswitch.split import is_split
from twoswitch.suites import activity_checks, split_suite
from twoswitch.switch import active_mask, two_switch_degree

RESULTS: dict[str, str] = {}


def record(key: str, ok: bool, detail: str) -> bool:
    line = f"{'PASS' if ok else 'FAIL'}  {key}: {detail}"
    RESULTS[key] = line
    return ok


# ------------------------------------------------------------------ helpers


def _popcount(x: int) -> int:
    return bin(x).count("1")


@functools.lru_cache(maxsize=None)
def _metagraph_degrees(degrees: tuple) -> dict:
    """rows -> degree in the realization graph, for a non-increasing sequence."""
    x = build_realization_graph(degrees)
    return {g.rows: x.degree(i) for i, g in enumerate(x.vertices)}


def _sorted_relabel(n, rows, deg):
    """Rename vertices so degrees become non-increasing (stable)."""
    order = sorted(range(n), key=lambda v: -deg[v])
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    new = [0] * n
    for v in range(n):
        r = rows[v]
        pv = pos[v]
        while r:
            low = r & -r
            new[pv] |= 1 << pos[low.bit_length() - 1]
            r ^= low
    return tuple(new), tuple(deg[v] for v in order)


def _quantities(n, rows):
    deg = [_popcount(r) for r in rows]
    m = sum(deg) // 2
    d = comb(m, 2) - sum(comb(x, 2) for x in deg)
    p4, c4, k4 = kernels.subgraph_counts4(n, rows)
    k3 = kernels.count_k3(n, rows)
    z2 = 0
    for v in range(n):
        r = rows[v] >> (v + 1)
        u = v + 1
        while r:
            if r & 1:
                z2 += deg[v] * deg[u]
            r >>= 1
            u += 1
    return deg, m, d, p4, c4, k3, k4, z2


@functools.lru_cache(maxsize=None)
def labeled_sweep(max_n: int = 7):
    """One pass over every labeled graph on ``n <= max_n`` vertices.

    Returns per-identity ``[tested, failed, first counterexample]`` tallies.
    The realization-graph degree of each labeled graph is read off the
    realization graph of its sorted sequence after the matching relabeling.
    """
    keys = ("contains_k4", "enum_vs_metagraph", "published_degree", "corrected_degree", "published_zagreb", "corrected_zagreb")
    tally = {k: [0, 0, None] for k in keys}

    def note(k, ok, rows, n):
        t = tally[k]
        t[0] += 1
        if not ok:
            t[1] += 1
            if t[2] is None:
                t[2] = to_graph6(Graph(n, rows))

    for n in range(0, max_n + 1):
        for g in all_labeled_graphs(n):
            rows = g.rows
            deg, m, d, p4, c4, k3, k4, z2 = _quantities(n, rows)
            enum = kernels.count_active_switches(n, rows)
            srows, sdeg = _sorted_relabel(n, rows, deg)
            meta = _metagraph_degrees(sdeg)[srows]
            corrected = 2 * d + 2 * c4 - p4
            note("contains_k4", k4 == 0, rows, n)
            note("enum_vs_metagraph", enum == meta, rows, n)
            note("published_degree", corrected - 4 * k4 == enum == meta, rows, n)
            note("corrected_degree", corrected == enum == meta, rows, n)
            note("published_zagreb", enum + z2 == m * m + 2 * c4 + 3 * k3 - 4 * k4, rows, n)
            note("corrected_zagreb", enum + z2 == m * m + 2 * c4 + 3 * k3, rows, n)
    return tally


def _describe(t) -> str:
    tested, failed, ce = t
    return f"{tested} graphs, {failed} failures" + (f" (first: graph6 {ce!r})" if ce else "")


def _girth5_graph(n, rng):
    """Random graph of girth at least 5: add edge uv only if dist(u, v) >= 4."""
    rows = [0] * n
    pairs = [(u, v) for v in range(n) for u in range(v)]
    rng.shuffle(pairs)
    keep = rng.random()
    for u, v in pairs:
        if rng.random() > keep:
            continue
        dist = {u: 0}
        q = deque([u])
        close = False
        while q and not close:
            x = q.popleft()
            if dist[x] == 3:
                continue
            r = rows[x]
            w = 0
            while r:
                if r & 1 and w not in dist:
                    dist[w] = dist[x] + 1
                    if w == v:
                        close = True
                        break
                    q.append(w)
                r >>= 1
                w += 1
        if not close:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _zagreb_random(count=10_000, max_n=32, seed=2024):
    rng = random.Random(seed)
    published = [0, 0, None]
    corrected = [0, 0, None]
    for _ in range(count):
        n = rng.randint(1, max_n)
        g = random_graph(n, rng.random(), rng)
        _, m, _, _, c4, k3, k4, z2 = _quantities(n, g.rows)
        enum = kernels.count_active_switches(n, g.rows)
        for t, rhs in ((published, m * m + 2 * c4 + 3 * k3 - 4 * k4), (corrected, m * m + 2 * c4 + 3 * k3)):
            t[0] += 1
            if enum + z2 != rhs:
                t[1] += 1
                t[2] = t[2] or to_graph6(g)
    return published, corrected


def _girth5_check(seed=7):
    rng = random.Random(seed)
    graphs = [petersen_graph()] + [cycle_graph(k) for k in range(5, 13)] + [path_graph(k) for k in range(1, 13)]
    graphs += [_girth5_graph(rng.randint(5, 32), rng) for _ in range(1000)]
    bad = []
    for g in graphs:
        assert girth(g) >= 5
        z2 = _quantities(g.n, g.rows)[-1]
        if two_switch_degree(g) + z2 != g.m * g.m:
            bad.append(to_graph6(g))
    return len(graphs), bad


# ---------------------------------------------------------------- criteria


@pytest.mark.slow
@pytest.mark.xfail(strict=True, reason="the -4 k4 term is wrong for graphs containing K4; see corrected companion")
def test_criterion_1_degree_formula_literal():
    sweep = labeled_sweep()
    t = sweep["published_degree"]
    assert t[1] == sweep["contains_k4"][1]  # it fails on exactly the graphs containing K4
    ok = record("1  degree = 2dpe + 2c4 - p4 - 4k4 = enumeration = metagraph degree, all labeled n<=7", t[1] == 0, _describe(t))
    assert ok


@pytest.mark.slow
def test_criterion_1_corrected_degree_formula():
    sweep = labeled_sweep()
    t = sweep["corrected_degree"]
    e = sweep["enum_vs_metagraph"]
    ok = record(
        "1c degree = 2dpe + 2c4 - p4 = enumeration = metagraph degree, all labeled n<=7",
        t[1] == 0 and e[1] == 0 and t[0] == sum(2 ** comb(n, 2) for n in range(8)),
        _describe(t),
    )
    assert ok


def test_criterion_2_space_of_2_2_2_1_1():
    x = build_realization_graph((2, 2, 2, 1, 1))
    profile = x.degree_profile()
    hubs = [g for i, g in enumerate(x.vertices) if x.degree(i) == 6]
    disconnected = [g for g in x.vertices if not is_connected(g)]
    hub_ok = (
        len(hubs) == 1
        and disconnected == hubs
        and sorted(len(c) for c in components(hubs[0])) == [2, 3]
        and hubs[0].m == 4
    )
    ok = len(x) == 7 and len(x.edges) == 15 and profile == {4: 6, 6: 1} and hub_ok
    record("2  realization graph of 2^3 1^2: 7 vertices, 15 edges, profile {4:6, 6:1}, hub K3+K2",
           ok, f"{len(x)} vertices, {len(x.edges)} edges, profile {profile}")
    assert ok


def test_criterion_3_paths_and_cycles():
    got = {}
    for n in range(5, 13):
        got[f"P{n}"] = (two_switch_degree(path_graph(n)), (n - 3) ** 2)
        got[f"C{n}"] = (two_switch_degree(cycle_graph(n)), n * (n - 4))
    got["C3"] = (two_switch_degree(cycle_graph(3)), 0)
    got["C4"] = (two_switch_degree(cycle_graph(4)), 2)
    bad = {k: v for k, v in got.items() if v[0] != v[1]}
    ok = not bad
    record("3  deg(Pn) = (n-3)^2, deg(Cn) = n(n-4) for 5<=n<=12, deg(C3)=0, deg(C4)=2", ok,
           f"{len(got)} graphs by enumeration" + (f", mismatches {bad}" if bad else ""))
    assert ok


def test_criterion_4_unicyclic_pair():
    u = triangle_with_tail()
    u2 = Graph.from_edges(6, [(2, 0), (0, 1), (1, 3), (3, 2), (2, 4), (4, 5)])  # square_with_tail, same labels as U
    assert sorted(square_with_tail().degrees) == sorted(u2.degrees)
    space = build_realization_graph(u.degrees, "unicyclic")
    values = {
        "formula": (u_degree_formula(u), u_degree_formula(u2)),
        "published formula": (published_u_degree_formula(u), published_u_degree_formula(u2)),
        "by cycle length": (u_degree_by_cases(u), u_degree_by_cases(u2)),
        "direct": (u_degree_direct(u), u_degree_direct(u2)),
        "unicyclic space": (space.degree(space.index(u)), space.degree(space.index(u2))),
    }
    ok = all(v == (11, 10) for v in values.values())
    record("4  u-degrees of the triangle-with-tail and square-with-tail are 11 and 10", ok, str(values))
    assert ok


def test_criterion_5_tree_spaces_regular():
    tested = 0
    bad = []
    for n in range(2, 9):
        for s in tree_sequences(n):
            f = build_realization_graph(s, "forests")
            k = dpe(f.vertices[0])
            tested += 1
            if not (f.is_connected() and set(f.degrees()) == {k}):
                bad.append(s.degrees)
    ok = not bad and tested > 0
    record("5  forest space of every tree sequence n<=8 is connected and dpe(s)-regular", ok,
           f"{tested} sequences" + (f", failing {bad[:3]}" if bad else ""))
    assert ok


def test_criterion_6_activity():
    seqs = 0
    bad = []
    for n in range(1, 8):
        for s in graphical_sequences(n):
            seqs += 1
            masks = {active_mask(g) for g in enumerate_realizations(s)}
            if len(masks) != 1:
                bad.append(("invariance", s.degrees))
    graphs = 0
    for g in graphs_up_to(7):
        graphs += 1
        checks = activity_checks(g)
        for name in ("equal_degree_same_activity", "inactive_eccentricity_at_most_2", "nonactive_diameter_at_most_3"):
            if not checks.get(name, True):
                bad.append((name, to_graph6(g)))
    sharp = enumerate_realizations((3, 3, 2, 1, 1))
    sharp_ok = all(active_mask(g) != 31 for g in sharp) and max(diameter(g) for g in sharp) == 3
    sharp_ok &= any(eccentricity(g, v) == 2 for g in sharp for v in range(5) if not (active_mask(g) >> v) & 1)
    ok = not bad and sharp_ok
    record("6  activity invariant over realizations; equal degrees share activity; ecc<=2; diameter<=3 (sharp at 3^2 2 1^2)",
           ok, f"{seqs} sequences, {graphs} graphs, sharp example ok={sharp_ok}" + (f", failing {bad[:3]}" if bad else ""))
    assert ok


@pytest.mark.slow
@pytest.mark.xfail(strict=True, reason="the -4 k4 term is wrong for graphs containing K4; see corrected companion")
def test_criterion_7_zagreb_literal():
    sweep = labeled_sweep()
    t = sweep["published_zagreb"]
    assert t[1] == sweep["contains_k4"][1]
    published, _ = _zagreb_random()
    n_g5, bad_g5 = _girth5_check()
    ok = t[1] == 0 and published[1] == 0 and not bad_g5
    record("7  deg + zeta2 = m^2 + 2c4 + 3k3 - 4k4 (labeled n<=7, 10^4 random n<=32); girth>=5: deg + zeta2 = m^2",
           ok, f"labeled: {_describe(t)}; random: {_describe(published)}; girth>=5: {n_g5} graphs, {len(bad_g5)} failures")
    assert ok


@pytest.mark.slow
def test_criterion_7_corrected_zagreb():
    t = labeled_sweep()["corrected_zagreb"]
    _, corrected = _zagreb_random()
    n_g5, bad_g5 = _girth5_check()
    ok = t[1] == 0 and corrected[1] == 0 and corrected[0] == 10_000 and not bad_g5
    record("7c deg + zeta2 = m^2 + 2c4 + 3k3 (labeled n<=7, 10^4 random n<=32); girth>=5: deg + zeta2 = m^2",
           ok, f"labeled: {_describe(t)}; random: {_describe(corrected)}; girth>=5: {n_g5} graphs, {len(bad_g5)} failures")
    assert ok


def test_criterion_8_split_suite():
    res = split_suite(7, compose_max_n=8)
    splits = sum(1 for g in graphs_up_to(7, 1) if is_split(g))
    names = {
        "degree_is_induced_p4_count", "balanced_iff_no_swing", "neighbourhood_comparability",
        "balanced_consequences", "composition_degree", "composition_activity",
    }
    covered = names <= set(res.tallies)
    failing = {t.name: t.counterexample for t in res.tallies.values() if not t.passed}
    ok = res.passed and covered
    summary = ", ".join(f"{t.name} {t.tested}" for t in res.tallies.values())
    record("8  split graphs n<=7 and compositions of total order <=8", ok,
           f"{splits} split graphs; checks: {summary}" + (f"; failing {failing}" if failing else ""))
    assert ok


def test_criterion_9_dual_isomorphism():
    tested = 0
    bad = []
    for n in range(1, 7):
        for s in graphical_sequences(n):
            tested += 1
            if not verify_dual_isomorphism(s).isomorphism:
                bad.append(s.degrees)
    ok = not bad
    record("9  complementation is an isomorphism onto the dual realization graph, all s with n<=6", ok,
           f"{tested} sequences" + (f", failing {bad[:3]}" if bad else ""))
    assert ok


def test_u_degree_published_vs_corrected():
    """Not a numbered criterion: where the published u-degree expression goes wrong."""
    tested = wrong = corrected_wrong = 0
    for n in range(3, 9):
        for s in graphical_sequences(n):
            if sum(s.degrees) != 2 * n or min(s.degrees) < 1:
                continue
            for g in build_realization_graph(s, "unicyclic").vertices:
                tested += 1
                direct = u_degree_direct(g)
                wrong += published_u_degree_formula(g) != direct
                corrected_wrong += u_degree_formula(g) != direct
    record("u  published u-degree vs corrected (labeled unicyclic, sorted sequences, n<=8)", corrected_wrong == 0,
           f"{tested} graphs; published wrong on {wrong}, corrected wrong on {corrected_wrong}")
    assert corrected_wrong == 0 and wrong > 0


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                pass
    for key in sorted(RESULTS):
        print(RESULTS[key])
    sys.exit(0)
