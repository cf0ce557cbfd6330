"""Polynomial-time relating-edge test for graphs with no 4-cycles and no 6-cycles.

For an edge ``xy`` and each endpoint ``v`` (with ``u`` the other endpoint):

* ``m1(v)`` are the neighbours of ``v`` at distance two from ``u``; a witness
  must dominate them without using ``v``'s or ``u``'s neighbourhoods.
* ``m2(v)`` are the neighbours of ``m1(v)`` outside ``N[v] | N[u]``, the only
  vertices that can do that job.

Without 4- and 6-cycles each ``m2`` vertex hangs off a single ``m1`` vertex,
``m2`` splits into components of at most two vertices, and choices made on the
two sides never conflict.  Choosing an independent dominating subset of
``m2(v)`` is then a bipartite matching of ``m1(v)`` into components, solved as
a unit-capacity flow.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .flow import FlowNetwork, max_flow
from .graph import Graph, GraphError, has_cycle_of_length, n_i
from .oracle import RelatingWitness, verify_relating_witness


class ForbiddenCycleDetected(Exception):
    """The local structure around the edge proves a 4- or 6-cycle exists."""


class NotC4C6Free(ForbiddenCycleDetected):
    """The input graph failed the up-front 4-cycle / 6-cycle check."""


@dataclass(frozen=True)
class SideDecomposition:
    v: int
    u: int
    m1: frozenset[int]
    m2: frozenset[int]
    components: tuple[frozenset[int], ...]
    attach: dict[int, int] = field(hash=False)


def decompose_side(g: Graph, v: int, u: int) -> SideDecomposition:
    if not g.has_edge(v, u):
        raise GraphError(f"({v}, {u}) is not an edge")
    m1 = n_i(g, [v], 1) & n_i(g, [u], 2)
    if not m1:
        return SideDecomposition(v, u, frozenset(), frozenset(), (), {})
    blocked = g.closed_neighborhood(v) | g.closed_neighborhood(u)
    m2 = n_i(g, m1, 1) - blocked

    attach = {}
    for w in sorted(m2):
        hooks = g.adj[w] & m1
        if len(hooks) != 1:
            raise ForbiddenCycleDetected(
                f"vertex {w} sees {sorted(hooks)} on the side of {v}: 4-cycle"
            )
        (attach[w],) = hooks

    components = []
    unseen = set(m2)
    for start in sorted(m2):
        if start not in unseen:
            continue
        unseen.discard(start)
        comp = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for z in g.adj[w] & unseen:
                unseen.discard(z)
                comp.add(z)
                queue.append(z)
        if len(comp) > 2:
            raise ForbiddenCycleDetected(
                f"component {sorted(comp)} on the side of {v} has "
                f"{len(comp)} vertices: 4- or 6-cycle"
            )
        components.append(frozenset(comp))
    return SideDecomposition(v, u, m1, m2, tuple(components), attach)


def build_side_network(d: SideDecomposition) -> tuple[FlowNetwork, dict[int, int]]:
    """Flow network source -> m1 -> m2 -> component -> sink.

    Node 0 is the source and node 1 the sink.  The returned dict maps the
    network nodes standing for ``m1`` and ``m2`` vertices back to the graph.
    """
    m1 = sorted(d.m1)
    m2 = sorted(d.m2)
    node = {}
    for w in m1 + m2:
        node[w] = len(node) + 2
    comp_node = [len(node) + 2 + i for i in range(len(d.components))]
    comp_of = {w: i for i, comp in enumerate(d.components) for w in comp}

    arcs = [(0, node[w]) for w in m1]
    for w in m2:
        arcs.append((node[d.attach[w]], node[w]))
    arcs.sort()
    arcs += [(node[w], comp_node[comp_of[w]]) for w in m2]
    arcs += [(a, 1) for a in comp_node]
    net = FlowNetwork(2 + len(node) + len(comp_node), 0, 1, tuple(arcs))
    return net, {k: w for w, k in node.items()}


def side_dominating_set(g: Graph, d: SideDecomposition) -> frozenset[int] | None:
    """An independent subset of ``m2`` dominating ``m1``, or None if none exists."""
    if not d.m1:
        return frozenset()
    net, back = build_side_network(d)
    res = max_flow(net)
    if res.value < len(d.m1):
        return None
    # m2 vertices carrying flow; at most one per component by the sink arcs.
    return frozenset(
        back[b] for (a, b), f in zip(net.arcs, res.arc_flow) if f and back.get(b) in d.m2
    )


def structural_violations(
    g: Graph, dx: SideDecomposition, dy: SideDecomposition
) -> list[str]:
    """Facts that must hold between the two sides when ``g`` has no 6-cycle.

    Returns a description for every violated fact (empty list when all hold).
    """
    problems = []
    both = dx.m2 & dy.m2
    if any(g.adj[a] & (dy.m2 - both) for a in dx.m2 - both):
        problems.append("edge between the two m2 sets")
    if any(g.adj[a] & both for a in both):
        problems.append("m2 intersection is not independent")
    if any(g.adj[a] & ((dx.m2 | dy.m2) - both) for a in both):
        problems.append("m2 intersection touches the rest of m2")
    return problems


def is_relating_poly(
    g: Graph, x: int, y: int, trust_cycle_free: bool = False
) -> RelatingWitness | None:
    """Decide whether ``xy`` is a relating edge; return a witness if it is.

    Unless ``trust_cycle_free`` is set, the graph is first checked for 4- and
    6-cycles (this check dominates the running time on large sparse graphs).
    """
    if not g.has_edge(x, y):
        raise GraphError(f"({x}, {y}) is not an edge")
    if not trust_cycle_free:
        for k in (4, 6):
            if has_cycle_of_length(g, k):
                raise NotC4C6Free(f"graph contains a {k}-cycle")

    dx = decompose_side(g, x, y)
    dy = decompose_side(g, y, x)
    if dx.m1 or dy.m1:
        sx = side_dominating_set(g, dx)
        if sx is None:
            return None
        sy = side_dominating_set(g, dy)
        if sy is None:
            return None
        chosen = set(sx | sy)
    else:
        chosen = set()

    # Grow to a maximal independent set of g - (N[x] | N[y]).
    blocked = g.closed_neighborhood(x) | g.closed_neighborhood(y)
    for w in g.vertices:
        if w not in blocked and w not in chosen and g.adj[w].isdisjoint(chosen):
            chosen.add(w)
    witness = frozenset(chosen)
    if not verify_relating_witness(g, x, y, witness):
        # Only reachable when a trusted graph was not actually C4/C6-free.
        raise ForbiddenCycleDetected("assembled witness is invalid")
    return RelatingWitness(witness)
