import random
from itertools import permutations

import pytest

from twoswitch.generate import all_labeled_graphs, graphs_up_to, random_graph, threshold_graphs
from twoswitch.graph import (
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    matching_graph,
    path_graph,
    star_graph,
)
from twoswitch.realization import enumerate_realizations
from twoswitch.switch import (
    TwoSwitch,
    active_part,
    active_vertices,
    apply,
    apply_sequence,
    enumerate_active_switches,
    extend,
    find_switch_sequence,
    inactive_edges,
    is_active,
    is_active_graph,
    switch_sequence_from_json,
    switch_sequence_to_json,
    two_switch_degree,
)


def test_equivalent_matrices_compare_equal_transpose_does_not():
    t = TwoSwitch(0, 1, 2, 3)
    assert t == TwoSwitch(2, 3, 0, 1) == TwoSwitch(1, 0, 3, 2) == TwoSwitch(3, 2, 1, 0)
    assert t != TwoSwitch(0, 2, 1, 3)
    assert t.inverse() == TwoSwitch(0, 2, 1, 3)
    with pytest.raises(ValueError):
        TwoSwitch(0, 0, 1, 2)


def test_switch_on_p4_rewires_to_another_path():
    g = path_graph(4)
    t = TwoSwitch(0, 1, 2, 3)
    assert is_active(t, g)
    h = apply(t, g)
    assert h.edge_set() == {(1, 2), (0, 2), (1, 3)}
    assert apply(t.inverse(), h) == g


def test_out_of_range_vertex_is_an_error():
    with pytest.raises(ValueError):
        is_active(TwoSwitch(0, 1, 2, 5), path_graph(4))


def test_inactive_switch_is_identity_and_idempotent():
    k = complete_graph(4)
    for q in permutations(range(4)):
        t = TwoSwitch(*q)
        assert not is_active(t, k)
        assert apply(t, k) == k
    g = cycle_graph(6)
    for t in enumerate_active_switches(g):
        once = apply(t, g)
        assert apply(t, once) == once


def test_small_degrees():
    assert two_switch_degree(path_graph(4)) == 1
    assert two_switch_degree(matching_graph(2)) == 2
    assert two_switch_degree(cycle_graph(4)) == 2
    assert two_switch_degree(path_graph(6)) == 9
    assert two_switch_degree(cycle_graph(7)) == 21
    assert two_switch_degree(disjoint_union(complete_graph(3), complete_graph(2))) == 6
    assert two_switch_degree(complete_graph(6)) == 0
    assert two_switch_degree(star_graph(5)) == 0


def test_threshold_graphs_have_degree_zero_and_no_active_vertices():
    for n in range(1, 7):
        for g in threshold_graphs(n):
            assert two_switch_degree(g) == 0
            assert not active_vertices(g).active
            assert active_part(g).n == 0


def test_degree_matches_brute_force_over_ordered_quadruples():
    rng = random.Random(4)
    for _ in range(40):
        g = random_graph(rng.randint(0, 8), rng.random(), rng)
        ts = {TwoSwitch(*q) for q in permutations(range(g.n), 4) if is_active(TwoSwitch(*q), g)}
        assert sorted(ts) == enumerate_active_switches(g)


def _induced_q_star_vertices(g):
    from itertools import combinations

    act = set()
    for q in combinations(range(g.n), 4):
        h = induced_subgraph(g, q)
        if h.m in (2, 3, 4) and two_switch_degree(h) > 0:
            act.update(q)
    return act


def test_every_switch_preserves_sequence_activity_and_inverts():
    for n in range(4, 7):
        for g in all_labeled_graphs(n):
            act = active_vertices(g)
            for t in enumerate_active_switches(g):
                h = apply(t, g)
                assert h.degrees == g.degrees
                assert active_vertices(h) == act
                assert apply(t.inverse(), h) == g


def test_activity_is_membership_in_an_induced_p4_c4_or_2k2():
    for g in graphs_up_to(7):
        assert active_vertices(g).active == frozenset(_induced_q_star_vertices(g))
        assert active_vertices(complement(g)) == active_vertices(g)


def test_basic_activity_examples():
    assert is_active_graph(cycle_graph(6)) and is_active_graph(path_graph(5))
    g = star_graph(3)
    assert 0 in active_vertices(g).inactive


def _split_example():
    # clique {1,2,3} -> 0,1,2; independent a,b,c -> 3,4,5
    return Graph.from_edges(
        6, [(0, 1), (0, 2), (1, 2), (3, 0), (3, 2), (4, 1), (4, 2), (5, 2)]
    )


def test_split_example_inactive_vertices_and_active_part():
    g = _split_example()
    rep = active_vertices(g)
    assert rep.inactive == {2, 5}
    star = active_part(g)
    assert star == induced_subgraph(g, [0, 1, 3, 4])
    assert is_active_graph(star)


def test_extension_reconstructs_graph_from_active_part():
    g = _split_example()
    act = sorted(active_vertices(g).active)
    inact = sorted(active_vertices(g).inactive)
    order = act + inact
    pos = {v: i for i, v in enumerate(order)}
    relabeled_edges = [(pos[u], pos[v]) for u, v in inactive_edges(g)]
    rebuilt = extend(active_part(g), len(inact), relabeled_edges)
    assert rebuilt == Graph.from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges()])
    assert extend(path_graph(3), 0, []) == path_graph(3)
    assert extend(complete_graph(2), 1, [(2, 0)]) == Graph.from_edges(3, [(0, 1), (0, 2)])
    with pytest.raises(ValueError):
        extend(path_graph(3), 1, [(0, 2)])


def test_find_switch_sequence_replays():
    reals = enumerate_realizations((2, 2, 2, 1, 1))
    for g in reals:
        for h in reals:
            seq = find_switch_sequence(g, h)
            cur = g
            for t in seq:
                assert is_active(t, cur)
                cur = apply(t, cur)
            assert cur == h
            assert (len(seq) == 0) == (g == h)
    # two labeled paths one switch apart
    g = Graph.from_edges(5, [(4, 0), (0, 1), (1, 2), (2, 3)])
    h = Graph.from_edges(5, [(4, 1), (1, 0), (0, 2), (2, 3)])
    assert len(find_switch_sequence(g, h)) == 1
    with pytest.raises(ValueError):
        find_switch_sequence(path_graph(4), cycle_graph(4))


def test_constructive_fallback_on_larger_graphs():
    rng = random.Random(1)
    g = random_graph(14, 0.4, rng)
    seqs = enumerate_active_switches(g)
    h = g
    for _ in range(25):
        h = apply(rng.choice(enumerate_active_switches(h)), h)
    seq = find_switch_sequence(g, h, bfs_max_n=0)
    assert apply_sequence(seq, g) == h
    assert seqs  # sanity: g is not threshold


def test_switch_sequence_json_round_trip():
    seq = [TwoSwitch(0, 1, 2, 3), TwoSwitch(4, 1, 0, 2)]
    text = switch_sequence_to_json(seq)
    assert switch_sequence_from_json(text) == seq
