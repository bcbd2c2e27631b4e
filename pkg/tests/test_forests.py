import random
from math import comb

import pytest

from twoswitch.census import dpe, zagreb
from twoswitch.generate import graphs_up_to, random_tree
from twoswitch.graph import Graph, cycle_graph, is_tree, is_unicyclic, path_graph, star_graph
from twoswitch.realization import build_realization_graph, enumerate_realizations, tree_sequences
from twoswitch.forests import (
    BREAKING,
    INACTIVE,
    PRESERVING,
    classify_switch,
    count_preserving,
    cycle_bridging_paths,
    decompose_unicyclic,
    f_degree,
    published_u_degree_alternate,
    published_u_degree_by_cases,
    published_u_degree_formula,
    square_with_tail,
    tree_degree,
    triangle_with_tail,
    u_degree,
    u_degree_by_cases,
    u_degree_direct,
    unicyclic_degree_by_cases,
)
from twoswitch.switch import TwoSwitch, enumerate_active_switches, two_switch_degree


def test_f_degree_examples():
    assert f_degree(path_graph(5)) == 3
    assert two_switch_degree(path_graph(5)) - f_degree(path_graph(5)) == 1
    assert f_degree(star_graph(5)) == 0
    with pytest.raises(ValueError):
        f_degree(cycle_graph(4))


def test_tree_switch_alignment():
    # path 0-1-2-3-4 with rows {01, 34}: aligned keeps a tree, crossed splits it
    t = path_graph(5)
    assert classify_switch(TwoSwitch(0, 1, 3, 4), t, "trees") == PRESERVING
    assert classify_switch(TwoSwitch(0, 1, 4, 3), t, "trees") == BREAKING
    assert classify_switch(TwoSwitch(0, 1, 2, 4), t, "trees") == INACTIVE
    with pytest.raises(ValueError):
        classify_switch(TwoSwitch(0, 1, 2, 3), cycle_graph(4), "trees")
    with pytest.raises(ValueError):
        count_preserving(t, "pseudoforests")


def test_tree_degree_two_ways():
    for n in range(4, 12):
        assert tree_degree(path_graph(n)) == (n - 3) ** 2
    assert tree_degree(star_graph(6)) == 0
    # double star: centres of degree 3 and 4
    ds = Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)])
    assert tree_degree(ds) == two_switch_degree(ds)
    rng = random.Random(6)
    for _ in range(30):
        t = random_tree(rng.randint(2, 14), rng)
        assert tree_degree(t) == two_switch_degree(t) == (t.n - 1) ** 2 - zagreb(t)[1]
        assert f_degree(t) == dpe(t) == count_preserving(t, "trees")


def test_f_degree_is_an_invariant_of_the_tree_sequence():
    for n in range(2, 9):
        for s in tree_sequences(n):
            trees = [g for g in enumerate_realizations(s) if is_tree(g)]
            assert {f_degree(t) for t in trees} == {dpe(trees[0])}
            for t in trees:
                assert f_degree(t) <= two_switch_degree(t)


def test_forests_that_are_not_trees_are_counted_directly():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4)])
    assert f_degree(g) == count_preserving(g, "forests")


def test_decomposition_examples():
    d = decompose_unicyclic(cycle_graph(6))
    assert d.c == 6 and not d.forest_vertices and d.attachment_count == 0
    u = triangle_with_tail()
    d = decompose_unicyclic(u)
    assert d.c == 3 and d.forest() == path_graph(4) and d.attachment_count == 1
    u2 = square_with_tail()
    d2 = decompose_unicyclic(u2)
    assert d2.c == 4 and d2.forest() == path_graph(3)
    assert d.to_dict() == {"cycle": [0, 1, 2], "forest_edges": [[2, 3], [3, 4], [4, 5]]}
    with pytest.raises(ValueError):
        decompose_unicyclic(path_graph(4))


def test_decomposition_invariants():
    for g in graphs_up_to(7, 3):
        if not is_unicyclic(g):
            continue
        d = decompose_unicyclic(g)
        assert set(g.edges()) == set(d.cycle_edges) | set(d.forest_edges)
        assert not set(d.cycle_edges) & set(d.forest_edges)


def test_u_degree_examples():
    u, u2 = triangle_with_tail(), square_with_tail()
    assert u.degrees == (2, 2, 3, 2, 2, 1) and sorted(u2.degrees) == sorted(u.degrees)
    assert u_degree(u) == 11
    assert u_degree(u2) == 10
    for n in range(3, 10):
        assert u_degree(cycle_graph(n)) == comb(n, 2) - n == dpe(cycle_graph(n))


def test_u_degree_space_counting():
    u, u2 = triangle_with_tail(), square_with_tail()
    space = build_realization_graph(u.degrees, "unicyclic")
    assert space.degree(space.index(u)) == 11
    # relabel U' so that it realizes the same labeled sequence as U
    u2 = Graph.from_edges(6, [(2, 0), (0, 1), (1, 3), (3, 2), (2, 4), (4, 5)])
    assert u2.degrees == u.degrees and u_degree(u2) == 10
    assert space.degree(space.index(u2)) == 10
    assert not space.is_regular() and space.is_connected()


def test_unicyclic_switch_cases_and_degree_formulas():
    for g in graphs_up_to(7, 3):
        if not is_unicyclic(g):
            continue
        d = decompose_unicyclic(g)
        for t in enumerate_active_switches(g):
            label = classify_switch(t, g, "unicyclic")  # asserts the case rule agrees
            if sum(e in d.cycle_edges for e in t.removed) == 1:
                assert label == PRESERVING
        direct = u_degree_direct(g)
        assert u_degree(g) == direct == u_degree_by_cases(g)
        assert direct <= two_switch_degree(g)
        assert unicyclic_degree_by_cases(g) == two_switch_degree(g)
        assert published_u_degree_formula(g) == published_u_degree_alternate(g)
        assert published_u_degree_by_cases(g) == published_u_degree_formula(g)


def test_published_u_degree_misses_cycle_bridging_paths():
    # triangle 0-1-2, pendant 3 on 0 and pendant 4 on 1: the pair {03, 14}
    # can only be rewired through the existing edge 01
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])
    assert cycle_bridging_paths(g) == 1
    assert published_u_degree_formula(g) == u_degree_direct(g) - 1
