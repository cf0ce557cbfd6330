import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relating.graph import (
    UNREACHABLE,
    GraphError,
    build_graph,
    complete_graph,
    cycle_graph,
    delete_edge,
    distance_layers,
    dominates,
    has_cycle_of_length,
    is_independent,
    is_maximal_independent,
    n_i,
    path_graph,
    read_dimacs_graph,
    write_dimacs_graph,
)

from helpers import atlas_graphs


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.adj[1] == {0, 2}
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_build_single_vertex():
    g = build_graph(1, [])
    assert g.n == 1 and g.adj == (frozenset(),)


@pytest.mark.parametrize(
    "n, edges",
    [(3, [(0, 0)]), (3, [(0, 3)]), (3, [(-1, 0)]), (3, [(0, 1), (1, 0)])],
    ids=["loop", "out-of-range", "negative", "duplicate"],
)
def test_build_rejects(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_edge_order_irrelevant():
    assert build_graph(4, [(2, 3), (0, 1), (1, 2)]) == path_graph(4)


def test_distance_layers():
    g = path_graph(3)
    assert distance_layers(g, [0]) == {0: 0, 1: 1, 2: 2}
    assert distance_layers(g, [0, 2]) == {0: 0, 1: 1, 2: 0}
    assert distance_layers(build_graph(2, []), [0]) == {0: 0, 1: UNREACHABLE}


def test_distance_layers_needs_source():
    with pytest.raises(GraphError):
        distance_layers(path_graph(3), [])


def test_n_i_examples():
    # C5 from vertex 0: networkx BFS gives {0:0, 1:1, 4:1, 2:2, 3:2}.
    lengths = nx.single_source_shortest_path_length(nx.cycle_graph(5), 0)
    assert {v for v, d in lengths.items() if d == 2} == {2, 3}
    assert n_i(cycle_graph(5), [0], 2) == {2, 3}
    assert n_i(path_graph(3), [1], 1) == {0, 2}
    assert n_i(path_graph(3), [0], 3) == frozenset()


@settings(max_examples=150, deadline=None)
@given(graphs(), st.data())
def test_layers_partition_and_symmetry(g, data):
    sources = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    dist = distance_layers(g, sources)
    assert n_i(g, sources, 0) == frozenset(sources)
    reachable = {v for v, d in dist.items() if d != UNREACHABLE}
    layers = [n_i(g, sources, i) for i in range(g.n)]
    assert sum(len(layer) for layer in layers) == len(reachable)
    assert set().union(*layers) == reachable
    u, v = data.draw(st.integers(0, g.n - 1)), data.draw(st.integers(0, g.n - 1))
    assert distance_layers(g, [u])[v] == distance_layers(g, [v])[u]


def test_independence(p3):
    assert is_independent(p3, {0, 2})
    assert not is_independent(p3, {0, 1})
    assert is_independent(complete_graph(4), set())


def test_dominates(p3):
    assert dominates(p3, {1}, {0, 1, 2})
    assert not dominates(p3, {0}, {2})
    assert dominates(p3, set(), set())
    assert not dominates(p3, set(), {0})


def test_maximal_independent(p3, c5):
    assert is_maximal_independent(p3, {0, 2})
    assert not is_maximal_independent(p3, {0})
    assert is_maximal_independent(c5, {0, 2})


def _maximal_by_extension(g, s):
    return is_independent(g, s) and all(
        not is_independent(g, s | {w}) for w in g.vertices if w not in s
    )


def test_maximality_two_ways_exhaustive():
    for g in atlas_graphs(7):
        for r in range(g.n + 1):
            for s in itertools.combinations(range(g.n), r):
                s = set(s)
                assert is_maximal_independent(g, s) == _maximal_by_extension(g, s)


@pytest.mark.parametrize(
    "n, present",
    [(4, {4}), (5, {5}), (6, {6}), (3, {3})],
)
def test_cycle_graphs(n, present):
    g = cycle_graph(n)
    for k in (3, 4, 5, 6):
        assert has_cycle_of_length(g, k) == (k in present)


def test_cycle_length_unsupported():
    with pytest.raises(GraphError):
        has_cycle_of_length(cycle_graph(7), 7)


def _cycle_lengths_naive(g):
    """Lengths k in 3..6 of simple cycles, trying every ordered vertex tuple."""
    found = set()
    for k in range(3, 7):
        for combo in itertools.combinations(range(g.n), k):
            first, rest = combo[0], combo[1:]
            for perm in itertools.permutations(rest):
                cyc = (first,) + perm
                if all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    found.add(k)
                    break
            if k in found:
                break
    return found


def test_cycle_detection_exhaustive():
    for g in atlas_graphs(7):
        naive = _cycle_lengths_naive(g)
        for k in (3, 4, 5, 6):
            assert has_cycle_of_length(g, k) == (k in naive), (g, k)


def test_delete_edge(p3):
    assert delete_edge(p3, 0, 1) == build_graph(3, [(1, 2)])
    assert delete_edge(complete_graph(2), 1, 0) == build_graph(2, [])
    assert p3 == path_graph(3)
    with pytest.raises(GraphError):
        delete_edge(p3, 0, 2)


def test_dimacs_write_is_sorted():
    g = build_graph(4, [(3, 2), (1, 0), (0, 3)])
    assert write_dimacs_graph(g) == "p edge 4 3\ne 1 2\ne 1 4\ne 3 4\n"


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_dimacs_round_trip(g):
    text = write_dimacs_graph(g, comments=["round trip"])
    assert read_dimacs_graph(text) == g
    assert write_dimacs_graph(read_dimacs_graph(text)) == write_dimacs_graph(g)


@pytest.mark.parametrize(
    "text",
    [
        "e 1 2\n",
        "p edge 2 1\n",
        "p edge 2 1\ne 1 3\n",
        "p edge 2 2\ne 1 2\ne 2 1\n",
        "p edge x 1\ne 1 2\n",
        "p edge 2 1\nq 1 2\n",
    ],
)
def test_dimacs_rejects(text):
    with pytest.raises(GraphError):
        read_dimacs_graph(text)
