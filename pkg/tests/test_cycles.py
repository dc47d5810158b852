import pytest

from oddcover.core import Graph, degree_profile, norm_edge
from oddcover.cycles import (
    balanced_orientation,
    max_degree_cycle_cover,
    odd_matching,
    peel_cycle_layers,
)
from oddcover.families import eulerian_random

from conftest import random_graph, rng_for


def cycle_edge_list(cycle):
    k = len(cycle)
    return [norm_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def test_odd_matching_eulerian_is_empty():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert odd_matching(g) == frozenset()


def test_odd_matching_path_closes_triangle():
    g = Graph(3, [(0, 1), (1, 2)])
    m = odd_matching(g)
    assert m == frozenset({(0, 2)})
    assert g.xor(m).edges == Graph(3, [(0, 1), (1, 2), (0, 2)]).edges


def test_odd_matching_two_disjoint_edges():
    g = Graph(4, [(0, 1), (2, 3)])
    m = odd_matching(g)
    assert len(m) == 2
    assert g.xor(m).is_even()


def test_odd_matching_properties_random():
    rng = rng_for("odd-matching")
    for _ in range(300):
        g = random_graph(rng.randrange(2, 20), rng.choice([0.2, 0.5, 0.8]), rng)
        _, v_odd, odd = degree_profile(g)
        m = odd_matching(g)
        assert len(m) == v_odd // 2
        assert sorted(v for e in m for v in e) == odd
        g2 = g.xor(m)
        assert g2.is_even()


def test_balanced_orientation_triangle():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    arcs = balanced_orientation(g)
    heads = {v for _, v in arcs}
    tails = {u for u, _ in arcs}
    assert heads == tails == {0, 1, 2}


def test_balanced_orientation_two_squares():
    g = Graph(8, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)])
    arcs = balanced_orientation(g)
    outd = [0] * 8
    ind = [0] * 8
    for u, v in arcs:
        outd[u] += 1
        ind[v] += 1
    assert outd == ind == [1] * 8


def test_balanced_orientation_k5():
    g = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    arcs = balanced_orientation(g)
    outd = [0] * 5
    ind = [0] * 5
    for u, v in arcs:
        outd[u] += 1
        ind[v] += 1
    assert outd == ind == [2] * 5


def test_balanced_orientation_rejects_odd_degrees():
    with pytest.raises(ValueError):
        balanced_orientation(Graph(2, [(0, 1)]))


def test_max_degree_cover_single_cycle():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    cc = max_degree_cycle_cover(g)
    assert len(cc) == 1 and set(cc[0]) == {0, 1, 2, 3}


def test_max_degree_cover_mixed_degree_example():
    # 7-vertex even graph with degree-4 core {1..5} and degree-2 fringe
    edges = [
        (0, 1), (1, 4), (4, 5), (3, 5), (2, 3), (0, 2),
        (1, 3), (5, 6), (4, 6), (3, 4), (1, 2), (2, 5),
    ]
    g = Graph(7, edges)
    deg = g.degrees()
    assert sorted(deg) == [2, 2, 4, 4, 4, 4, 4]
    cc = max_degree_cycle_cover(g)
    covered = {v for c in cc for v in c}
    assert {v for v in range(7) if deg[v] == 4} <= covered
    seen = set()
    for c in cc:
        assert len(c) >= 3
        assert not (seen & set(c))
        seen |= set(c)
        for e in cycle_edge_list(c):
            assert e in g.edges


def test_max_degree_cover_k5():
    g = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    cc = max_degree_cycle_cover(g)
    assert {v for c in cc for v in c} == {0, 1, 2, 3, 4}


def test_max_degree_cover_removal_drops_max_degree_by_two():
    rng = rng_for("cover-drop")
    for trial in range(100):
        g = eulerian_random(rng.randrange(4, 30), seed=trial)
        if g.m == 0:
            continue
        delta, _, _ = degree_profile(g)
        cc = max_degree_cycle_cover(g)
        g2 = g.remove_edges(e for c in cc for e in cycle_edge_list(c))
        deg2 = g2.degrees()
        deg1 = g.degrees()
        for v in range(g.n):
            if deg1[v] == delta:
                assert deg2[v] == delta - 2
        assert g2.is_even()


def test_peel_layers_counts():
    g4 = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    layers = peel_cycle_layers(g4)
    assert len(layers) == 2
    edges = [e for lay in layers for c in lay for e in cycle_edge_list(c)]
    assert sorted(edges) == sorted(g4.edges)
    single = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert len(peel_cycle_layers(single)) == 1


def test_peel_layers_partition_random():
    rng = rng_for("peel")
    for trial in range(120):
        g = eulerian_random(rng.randrange(3, 40), seed=1000 + trial)
        layers = peel_cycle_layers(g)
        delta, _, _ = degree_profile(g)
        assert len(layers) == delta // 2
        edges = [e for lay in layers for c in lay for e in cycle_edge_list(c)]
        assert len(edges) == g.m and set(edges) == g.edges


def test_peel_layers_rejects_odd():
    with pytest.raises(ValueError):
        peel_cycle_layers(Graph(3, [(0, 1), (1, 2)]))
