"""Graph families shared by the test modules."""

import itertools

import networkx as nx

from relating.graph import build_graph


def to_graph(G):
    idx = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return build_graph(len(idx), [(idx[u], idx[v]) for u, v in G.edges()])


def atlas_graphs(max_n=7, min_n=0):
    """Every graph on up to 7 vertices, one per isomorphism class."""
    for G in nx.graph_atlas_g():
        if min_n <= G.number_of_nodes() <= max_n:
            yield to_graph(G)


def labeled_graphs(n):
    """All 2^(n choose 2) labelled graphs on vertices 0..n-1."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def brute_min_cut(net):
    """Smallest number of arcs leaving a source-side set, over all 2^(n-2) cuts."""
    inner = [v for v in range(net.node_count) if v not in (net.source, net.sink)]
    out = [0] * net.node_count
    for a, b in net.arcs:
        out[a] |= 1 << b
    best = len(net.arcs)
    for mask in range(1 << len(inner)):
        side = 1 << net.source
        for i, v in enumerate(inner):
            if mask >> i & 1:
                side |= 1 << v
        cut = sum(
            (out[v] & ~side).bit_count() for v in range(net.node_count) if side >> v & 1
        )
        best = min(best, cut)
    return best


def random_network(rng, max_nodes=12):
    from relating.flow import FlowNetwork

    n = rng.randint(2, max_nodes)
    source, sink = rng.sample(range(n), 2)
    density = rng.random()
    arcs = [
        (a, b)
        for a in range(n)
        for b in range(n)
        if a != b and b != source and a != sink and rng.random() < density
    ]
    return FlowNetwork(n, source, sink, tuple(arcs))
