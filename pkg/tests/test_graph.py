import random

import networkx as nx
import pytest

from localcross.errors import InputError
from localcross.graph import (
    BipartiteInstance,
    CircularDrawing,
    Graph,
    LinearLayout,
    TwoLayerDrawing,
    biconnected_components,
    circular_crossings_per_edge,
    circular_pierce,
    connected_components,
    density_guard,
    is_biconnected,
    layout_bandwidth,
    pierce_count,
    two_coloring,
    two_layer_cross,
    two_layer_crossings_per_edge,
    two_layer_weighted_load,
)
from localcross.oracle import oracle_bandwidth

from _catalog import random_connected, to_nx


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


# x1, x2 = 0, 1 and y1, y2 = 2, 3
def test_two_layer_cross_inversion():
    d = TwoLayerDrawing([0, 1], [2, 3])
    assert two_layer_cross(d, (0, 3), (1, 2))
    assert not two_layer_cross(d, (0, 3), (0, 3))
    assert not two_layer_cross(d, (0, 2), (0, 3))
    assert not two_layer_cross(d, (0, 2), (1, 3))


def test_two_layer_cross_unknown_vertex():
    d = TwoLayerDrawing([0, 1], [2, 3])
    with pytest.raises(InputError):
        two_layer_cross(d, (0, 9), (1, 2))


def test_k22_every_drawing_has_one_crossing_per_edge():
    g = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    for xo in ([0, 1], [1, 0]):
        for yo in ([2, 3], [3, 2]):
            counts = two_layer_crossings_per_edge(g, TwoLayerDrawing(xo, yo))
            assert set(counts.values()) == {0, 1}
            assert sum(counts.values()) == 2
    # the two edges of the anti-parallel pair carry the crossing
    counts = two_layer_crossings_per_edge(g, TwoLayerDrawing([0, 1], [2, 3]))
    assert counts[(0, 3)] == counts[(1, 2)] == 1


def test_path_and_disjoint_edges():
    path = Graph(3, [(0, 2), (1, 2)])
    assert set(two_layer_crossings_per_edge(path, TwoLayerDrawing([0, 1], [2])).values()) == {0}
    two = Graph(4, [(0, 2), (1, 3)])
    assert two_layer_crossings_per_edge(two, TwoLayerDrawing([0, 1], [3, 2])) == {(0, 2): 1, (1, 3): 1}


def test_weighted_load_modes():
    g = Graph(4, [(0, 2), (1, 3)], {(0, 2): 3, (1, 3): 5})
    d = TwoLayerDrawing([0, 1], [3, 2])
    assert two_layer_weighted_load(g, d, "sum") == {(0, 2): 5, (1, 3): 3}
    assert two_layer_weighted_load(g, d, "product") == {(0, 2): 15, (1, 3): 15}


def test_circular_pierce_examples():
    # cycle (1,2,3,4) relabelled to 0..3
    d = CircularDrawing([0, 1, 2, 3])
    assert circular_pierce(d, (0, 2), (1, 3))
    assert not circular_pierce(d, (0, 1), (2, 3))
    d5 = CircularDrawing([0, 1, 2, 3, 4])
    assert circular_pierce(d5, (1, 4), (0, 2))
    with pytest.raises(InputError):
        circular_pierce(d, (0, 9), (1, 2))


def test_circular_counts_k4_cycle_k5():
    k4 = complete(4)
    counts = circular_crossings_per_edge(k4, CircularDrawing(range(4)))
    assert counts[(0, 2)] == counts[(1, 3)] == 1
    assert all(counts[e] == 0 for e in [(0, 1), (1, 2), (2, 3), (0, 3)])
    c7 = Graph(7, [(i, (i + 1) % 7) for i in range(7)])
    assert set(circular_crossings_per_edge(c7, CircularDrawing(range(7))).values()) == {0}
    counts = circular_crossings_per_edge(complete(5), CircularDrawing(range(5)))
    for (u, v), c in counts.items():
        boundary = (v - u) in (1, 4)
        assert c == (0 if boundary else 2)


def test_pierce_count_matches_pairs():
    g = complete(5)
    d = CircularDrawing(range(5))
    assert pierce_count(g, d, (0, 2)) == 2


def test_circular_drawing_canonical_equality():
    a = CircularDrawing([3, 1, 0, 2])
    assert a.canonical().cycle == (0, 1, 3, 2)
    assert a == CircularDrawing([2, 0, 1, 3])
    assert a == a.reversed()
    assert hash(a) == hash(a.reversed())


def test_layout_bandwidth_examples():
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert layout_bandwidth(p4, LinearLayout([0, 1, 2, 3])) == 1
    star = Graph(5, [(0, i) for i in range(1, 5)])
    assert layout_bandwidth(star, LinearLayout([1, 2, 0, 3, 4])) == 2
    assert oracle_bandwidth(star)[0] == 2
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert layout_bandwidth(c4, LinearLayout([0, 1, 2, 3])) == 3
    with pytest.raises(InputError):
        layout_bandwidth(c4, LinearLayout([0, 1, 2]))


def test_biconnected_components_examples():
    bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert biconnected_components(bowtie) == [[0, 1, 2], [2, 3, 4]]
    tree = Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert sorted(biconnected_components(tree)) == sorted([list(e) for e in tree.edges])
    assert biconnected_components(complete(4)) == [[0, 1, 2, 3]]
    assert is_biconnected(complete(4)) and not is_biconnected(bowtie)
    assert biconnected_components(Graph(2, [])) == [[0], [1]]


def test_biconnected_components_agree_with_networkx():
    rng = random.Random(5)
    for _ in range(200):
        g = random_connected(rng.randint(2, 10), rng, p=rng.uniform(0.1, 0.5))
        ours = sorted(biconnected_components(g))
        theirs = sorted(sorted(c) for c in nx.biconnected_components(to_nx(g)))
        assert ours == theirs


def test_density_guard_examples():
    assert density_guard(complete(5), 1)
    assert not density_guard(complete(20), 1)
    tree = Graph(6, [(i, i + 1) for i in range(5)])
    assert all(density_guard(tree, k) for k in range(1, 5))
    assert density_guard(tree, 0)
    assert not density_guard(complete(4), 0)
    # 4.1 * 30 is 122.99999... in floating point; the exact bound is 123
    dense = Graph(30, [(u, v) for u in range(30) for v in range(u + 1, 30)][:123])
    assert density_guard(dense, 1)
    assert not density_guard(Graph(30, [(u, v) for u in range(30) for v in range(u + 1, 30)][:124]), 1)


def test_graph_validation():
    with pytest.raises(InputError):
        Graph(2, [(0, 0)])
    with pytest.raises(InputError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(InputError):
        Graph(2, [(0, 2)])
    with pytest.raises(InputError):
        Graph(2, [(0, 1)], {(0, 1): 0})
    g = Graph(3, [(1, 0), (2, 1)], {(0, 1): 4})
    assert g.edges == ((0, 1), (1, 2))
    assert g.weight((1, 0)) == 4 and g.weight((1, 2)) == 1
    assert g.without_edge((0, 1)).edges == ((1, 2),)


def test_bipartite_instance_validation():
    g = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(InputError):
        BipartiteInstance(g, [0, 1])
    with pytest.raises(InputError):
        BipartiteInstance(g, [1], fixed_x_order=[0])
    inst = BipartiteInstance(g, [1])
    assert inst.y_side == frozenset({0, 2})
    assert inst.oriented((0, 1)) == (1, 0)


def test_two_coloring_and_components():
    odd = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert two_coloring(odd) is None
    g = Graph(5, [(0, 1), (3, 4)])
    xs, ys = two_coloring(g)
    assert xs == {0, 2, 3} and ys == {1, 4}
    assert connected_components(g) == [[0, 1], [2], [3, 4]]
    assert connected_components(g, [0, 3, 4]) == [[0], [3, 4]]
