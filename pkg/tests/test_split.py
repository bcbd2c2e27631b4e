from itertools import combinations

import networkx as nx
import pytest

from twoswitch.census import census4
from twoswitch.generate import graphs_up_to
from twoswitch.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    join,
    matching_graph,
    path_graph,
    star_graph,
)
from twoswitch.split import (
    SplitBipartition,
    analyze_split,
    bipartitions,
    bipartitions_bruteforce,
    compose,
    find_decomposition,
    indecomposable_by_test,
    is_decomposable,
    is_prime,
    is_split,
    split_active_vertices,
    split_factor,
    swing_vertices,
)
from twoswitch.switch import active_mask, active_vertices, two_switch_degree


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _has_induced(g, pattern):
    k = pattern.number_of_nodes()
    for q in combinations(range(g.n), k):
        if nx.is_isomorphic(_nx(induced_subgraph(g, q)), pattern):
            return True
    return False


FORBIDDEN = [nx.cycle_graph(4), nx.cycle_graph(5), nx.Graph([(0, 1), (2, 3)])]


def test_recognition_matches_forbidden_subgraphs():
    for g in graphs_up_to(6):
        expected = not any(_has_induced(g, f) for f in FORBIDDEN)
        res = is_split(g)
        assert bool(res) == expected
        if not res:
            w = sorted(res.witness)
            assert any(nx.is_isomorphic(_nx(induced_subgraph(g, w)), f) for f in FORBIDDEN)


def test_split_counts_by_order():
    # unlabeled split graphs on 1..7 vertices
    counts = [sum(1 for g in graphs_up_to(n, n) if is_split(g)) for n in range(1, 8)]
    assert counts == [1, 2, 4, 9, 21, 56, 164]


def test_bipartitions_match_brute_force():
    for g in graphs_up_to(7, 1):
        if is_split(g):
            assert bipartitions(g) == bipartitions_bruteforce(g)
    with pytest.raises(ValueError):
        bipartitions(cycle_graph(4))


def test_balanced_iff_no_swing_and_degree_is_p4_count():
    for g in graphs_up_to(7, 1):
        if not is_split(g):
            continue
        a = analyze_split(g)
        assert a.balanced == (not a.swing)
        assert two_switch_degree(g) == census4(g).P4
        for b in a.bipartitions:
            assert split_active_vertices(g, b) == active_vertices(g)


def test_swing_examples():
    # a claw: the clique is the centre alone or the centre plus any one leaf
    g = star_graph(3)
    a = analyze_split(g)
    assert not a.balanced and len(a.bipartitions) == 4
    assert swing_vertices(g, a.bipartitions[0])
    assert analyze_split(path_graph(4)).balanced


def test_invalid_bipartition_rejected():
    g = path_graph(4)
    bad = SplitBipartition(frozenset({0, 1, 2}), frozenset({3}))
    with pytest.raises(ValueError):
        split_active_vertices(g, bad)
    with pytest.raises(ValueError):
        compose(g, path_graph(2), bad)


def test_composition_adds_degrees_and_edges():
    p4 = path_graph(4)
    g = cycle_graph(5)
    sg = compose(p4, g)
    bip = bipartitions(p4)[0]
    assert sg.n == 9
    assert sg.m == p4.m + g.m + len(bip.clique) * g.n
    assert two_switch_degree(sg) == two_switch_degree(p4) + two_switch_degree(g)
    assert active_mask(sg) == (1 << 9) - 1
    assert compose(complete_graph(1), g) == join(complete_graph(1), g)
    k1 = Graph(1, (0,))
    as_independent = SplitBipartition(frozenset(), frozenset({0}))
    assert compose(k1, g, as_independent) == disjoint_union(k1, g)


def test_decomposition_round_trip():
    p4 = path_graph(4)
    sg = compose(p4, matching_graph(2))
    d = find_decomposition(sg)
    assert d is not None
    s, bip, h = split_factor(sg, d)
    assert compose(s, h, bip).m == sg.m
    assert is_decomposable(sg) and not is_prime(sg)


def test_prime_examples():
    assert is_prime(path_graph(4))
    assert is_prime(cycle_graph(5))
    assert not is_prime(complete_graph(1)) and not is_prime(Graph(0, ()))
    assert not is_prime(star_graph(3))
    # a non-active graph always decomposes
    for g in graphs_up_to(6, 2):
        if active_mask(g) != (1 << g.n) - 1:
            assert find_decomposition(g) is not None


def test_indecomposability_test_is_sound():
    seen = 0
    for g in graphs_up_to(7, 1):
        if indecomposable_by_test(g):
            seen += 1
            assert find_decomposition(g) is None
    assert seen > 0
