"""Exhaustive verification suites over small graphs and degree sequences.

Each suite runs named checks and tallies, per check, how many instances were
tested, how many failed and the first failing instance (as graph6 or a
degree sequence). ``python -m twoswitch verify`` is a thin wrapper.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb

from .census import (
    c4_trace,
    census4,
    census_relations,
    count_k3,
    degree_formula,
    degree_from_census,
    degree_zagreb_relation,
    dpe,
    dpe_direct,
    edge_product_sum,
    k3_trace,
    subgraph_counts,
    trace_power,
    zagreb,
)
from .forests import (
    count_preserving,
    f_degree,
    tree_degree,
    u_degree_by_cases,
    u_degree_formula,
    unicyclic_degree_by_cases,
)
from .generate import graphs_up_to, random_graph
from .graph import (
    Graph,
    components,
    complement,
    complete_graph,
    diameter,
    eccentricity,
    girth,
    induced_subgraph,
    is_connected,
    is_tree,
    is_unicyclic,
    join,
    to_graph6,
)
from .realization import (
    active_space,
    build_realization_graph,
    enumerate_realizations,
    graphical_sequences,
    tree_sequences,
    unicyclic_sequences,
    verify_dual_isomorphism,
)
from .split import (
    bipartitions,
    bipartite_part_has_4cycle,
    compose,
    composed_bipartition,
    indecomposable_by_test,
    find_decomposition,
    is_split,
    split_active_vertices,
    swing_vertices,
    universal_vertices,
)
from .switch import active_mask, active_vertices, two_switch_degree

SUITES = ("identities", "activity", "spaces", "split")


@dataclass
class Tally:
    name: str
    tested: int = 0
    failed: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, witness) -> None:
        self.tested += 1
        if not ok:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = _describe(witness)

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "tested": self.tested,
            "failed": self.failed,
            "counterexample": self.counterexample,
        }


def _describe(w) -> str:
    if isinstance(w, Graph):
        return to_graph6(w)
    if hasattr(w, "degrees"):
        return ",".join(map(str, w.degrees))
    return str(w)


@dataclass
class SuiteResult:
    suite: str
    max_n: int
    tallies: dict = field(default_factory=dict)

    def check(self, name: str, ok: bool, witness) -> None:
        self.tallies.setdefault(name, Tally(name)).record(bool(ok), witness)

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.tallies.values())

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "max_n": self.max_n,
            "passed": self.passed,
            "checks": [t.to_dict() for t in self.tallies.values()],
        }


# ------------------------------------------------------ single-graph identities


def graph_checks(g: Graph, degree: int | None = None) -> dict[str, bool]:
    """Every closed-form identity that applies to ``g``, keyed by a descriptive name."""
    if degree is None:
        degree = two_switch_degree(g)
    out: dict[str, bool] = {}
    p4, c4, k4 = subgraph_counts(g)
    k3 = count_k3(g)
    cen = census4(g)
    rel = census_relations(cen)
    z1, z2 = zagreb(g)
    d = dpe(g)
    out["degree_closed_form"] = degree_formula(g) == degree
    out["degree_from_induced_census"] = degree_from_census(cen) == degree
    out["census_total"] = cen.total == comb(g.n, 4)
    out["census_relations"] = rel == {"c4": c4, "p4": p4, "dpe": d}
    out["dpe_from_sequence"] = d == dpe_direct(g)
    out["induced_p4_parity"] = degree % 2 == cen.P4 % 2
    out["degree_bound"] = degree <= 2 * d <= g.m * (g.m - 1)
    out["p4_triangle_edge_sum"] = p4 + 3 * k3 == edge_product_sum(g)
    out["triangle_trace"] = k3_trace(g) == k3
    out["four_cycle_trace"] = c4_trace(g) == c4
    out["fourth_power_trace"] = trace_power(g, 4) == 8 * c4 - 2 * g.m + 2 * z1
    out["zagreb_relation"] = degree_zagreb_relation(g, degree).holds
    if girth(g) >= 5:
        out["zagreb_large_girth"] = degree + z2 == g.m * g.m
    gbar = complement(g)
    out["complement_degree"] = two_switch_degree(gbar) == degree
    cbar = census4(gbar)
    out["complement_census"] = cbar.P4 == cen.P4 and cbar.two_K2 == cen.C4
    out["complement_activity"] = active_mask(gbar) == active_mask(g)
    comps = components(g)
    if len(comps) > 1:
        parts = [induced_subgraph(g, c) for c in comps]
        sizes = [h.m for h in parts]
        cross = sum(sizes[i] * sizes[j] for i in range(len(sizes)) for j in range(i + 1, len(sizes)))
        out["degree_over_components"] = sum(two_switch_degree(h) for h in parts) + 2 * cross == degree
        out["dpe_over_components"] = sum(dpe(h) for h in parts) + cross == d
    if is_tree(g) and g.n >= 2:
        out["tree_degree"] = tree_degree(g) == degree
        out["tree_f_degree"] = f_degree(g) == count_preserving(g, "forests")
    if is_unicyclic(g):
        out["unicyclic_degree_by_cycle_length"] = unicyclic_degree_by_cases(g) == degree
        direct = count_preserving(g, "unicyclic")
        out["u_degree_closed_form"] = u_degree_formula(g) == direct
        out["u_degree_by_cycle_length"] = u_degree_by_cases(g) == direct
    return out


def activity_checks(g: Graph) -> dict[str, bool]:
    """Structural facts about active and inactive vertices of ``g``."""
    out: dict[str, bool] = {}
    rep = active_vertices(g)
    deg = g.degrees
    by_degree: dict[int, set] = {}
    for v in range(g.n):
        by_degree.setdefault(deg[v], set()).add(v in rep.active)
    out["equal_degree_same_activity"] = all(len(x) == 1 for x in by_degree.values())
    if g.n and min(deg) > 0:
        out["inactive_eccentricity_at_most_2"] = all(eccentricity(g, v) <= 2 for v in rep.inactive)
        if rep.inactive:
            out["nonactive_diameter_at_most_3"] = is_connected(g) and diameter(g) <= 3
    if rep.inactive and g.n and min(deg) > 0:
        out["nonactive_connected"] = is_connected(g)
    if g.n and is_connected(g) and diameter(g) >= 4:
        out["large_diameter_active"] = not rep.inactive
    if g.n and len(set(deg)) == 1 and is_connected(g) and g.m != comb(g.n, 2):
        out["regular_connected_active"] = not rep.inactive
    out["join_preserves_degree"] = two_switch_degree(join(g, complete_graph(1))) == two_switch_degree(g)
    return out


# ------------------------------------------------------------------- suites


def identities_suite(max_n: int = 6, random_count: int = 0, seed: int = 0, random_max_n: int = 32) -> SuiteResult:
    """Closed-form identities on every graph up to isomorphism with ``n <= max_n``.

    ``random_count`` extra random graphs (orders up to ``random_max_n``,
    uniform edge density) are checked with the census-free identities.
    """
    res = SuiteResult("identities", max_n)
    for g in graphs_up_to(min(max_n, 8)):
        for name, ok in graph_checks(g).items():
            res.check(name, ok, g)
    rng = random.Random(seed)
    for _ in range(random_count):
        n = rng.randint(1, random_max_n)
        g = random_graph(n, rng.random(), rng)
        deg = two_switch_degree(g)
        res.check("degree_closed_form", degree_formula(g) == deg, g)
        res.check("zagreb_relation", degree_zagreb_relation(g, deg).holds, g)
    return res


def activity_suite(max_n: int = 6) -> SuiteResult:
    """Activity facts on all graphs and activity invariance over every realization space."""
    res = SuiteResult("activity", max_n)
    for g in graphs_up_to(min(max_n, 8)):
        for name, ok in activity_checks(g).items():
            res.check(name, ok, g)
    for n in range(1, max_n + 1):
        for s in graphical_sequences(n):
            reals = enumerate_realizations(s)
            masks = {active_mask(g) for g in reals}
            res.check("activity_invariant_over_realizations", len(masks) == 1, s)
            if any(active_mask(g) != (1 << n) - 1 for g in reals) and min(s.degrees) > 0:
                res.check("nonactive_sequence_all_connected", all(is_connected(g) for g in reals), s)
    return res


def spaces_suite(max_n: int = 6, dual_max_n: int = 6) -> SuiteResult:
    """Realization graphs: connectivity, degree oracle, tree and unicyclic subspaces."""
    res = SuiteResult("spaces", max_n)
    for n in range(1, max_n + 1):
        for s in graphical_sequences(n):
            reals = enumerate_realizations(s)
            x = build_realization_graph(s, realizations=reals)
            res.check("realization_graph_connected", x.is_connected(), s)
            for i, g in enumerate(reals):
                deg = two_switch_degree(g)
                res.check("metagraph_degree", x.degree(i) == deg == degree_formula(g), g)
            a = active_space(x)
            res.check(
                "active_part_isomorphism",
                a.consistent_activity and a.consistent_inactive_edges and a.isomorphism,
                s,
            )
            if n <= dual_max_n:
                res.check("complement_isomorphism", verify_dual_isomorphism(s).isomorphism, s)
        if n >= 2:
            for s in tree_sequences(n):
                f = build_realization_graph(s, "forests")
                k = dpe(f.vertices[0])
                res.check("tree_space_regular", f.is_connected() and set(f.degrees()) == {k}, s)
        if n >= 3:
            for s in unicyclic_sequences(n):
                u = build_realization_graph(s, "unicyclic")
                if not len(u):
                    continue
                res.check("unicyclic_space_connected", u.is_connected(), s)
                for i, g in enumerate(u.vertices):
                    res.check("u_degree_closed_form", u.degree(i) == u_degree_formula(g), g)
    return res


def split_suite(max_n: int = 6, compose_max_n: int = 8) -> SuiteResult:
    """Split-graph facts on every split graph up to ``max_n`` and on compositions."""
    res = SuiteResult("split", max_n)
    splits = [g for g in graphs_up_to(min(max_n, 8), 1) if is_split(g)]
    for g in splits:
        deg = two_switch_degree(g)
        cen = census4(g)
        bips = bipartitions(g)
        balanced = len(bips) == 1
        res.check("degree_is_induced_p4_count", deg == cen.P4, g)
        res.check("balanced_iff_no_swing", balanced == (not swing_vertices(g, bips[0])), g)
        act = active_vertices(g)
        res.check("neighbourhood_comparability", all(split_active_vertices(g, b) == act for b in bips), g)
        if not act.inactive:
            res.check("active_implies_balanced", balanced, g)
        for b in bips:
            res.check("swing_inactive", swing_vertices(g, b) <= act.inactive, g)
            universal = universal_vertices(g)
            inter = frozenset(range(g.n))
            for v in b.independent:
                inter &= frozenset(g.neighbors(v))
            if b.independent:
                # a universal vertex placed in I is not its own neighbour, hence "- I"
                res.check("universal_is_independent_intersection", inter == universal - b.independent, g)
        if balanced:
            b = bips[0]
            union = frozenset()
            for v in b.independent:
                union |= frozenset(g.neighbors(v))
            res.check(
                "balanced_consequences",
                deg >= 1
                and len(b.clique) >= 2
                and len(b.independent) >= 2
                and union == b.clique
                and len(universal_vertices(g)) <= len(b.clique) - 2,
                g,
            )
        if indecomposable_by_test(g):
            res.check("indecomposability_test", find_decomposition(g) is None, g)
    small = [g for g in splits if g.n <= compose_max_n - 1]
    others = list(graphs_up_to(min(compose_max_n - 1, 7), 1))
    for s in small:
        bip = bipartitions(s)[0]
        for h in others:
            if s.n + h.n > compose_max_n:
                continue
            sg = compose(s, h, bip)
            res.check(
                "composition_degree", two_switch_degree(sg) == two_switch_degree(s) + two_switch_degree(h), sg
            )
            full = active_mask(sg) == (1 << sg.n) - 1
            both = active_mask(s) == (1 << s.n) - 1 and active_mask(h) == (1 << h.n) - 1
            res.check("composition_activity", full == both, sg)
            if h.n and is_split(h):
                res.check(
                    "composition_balance",
                    (len(bipartitions(sg)) == 1) == (len(bipartitions(h)) == 1),
                    sg,
                )
                hb = bipartitions(h)[0]
                a_ok = any(sg.degree(a) != 1 for a in bip.independent)
                if is_connected(sg) and bip.independent and hb.independent and a_ok:
                    res.check(
                        "composition_four_cycle",
                        bipartite_part_has_4cycle(sg, composed_bipartition(s, bip, hb)),
                        sg,
                    )
    return res


def run_suite(name: str, max_n: int, *, seed: int = 0, random_count: int = 0) -> SuiteResult:
    if name == "identities":
        return identities_suite(max_n, random_count=random_count, seed=seed)
    if name == "activity":
        return activity_suite(max_n)
    if name == "spaces":
        return spaces_suite(max_n)
    if name == "split":
        return split_suite(max_n)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")


__all__ = [
    "SUITES",
    "SuiteResult",
    "Tally",
    "activity_checks",
    "activity_suite",
    "graph_checks",
    "identities_suite",
    "run_suite",
    "spaces_suite",
    "split_suite",
]
