"""Immutable simple graphs and the neighbourhood primitives built on them.

Vertices are dense integers ``0..n-1``.  Vertex sets are plain ``frozenset``
objects; nothing here mutates a graph after construction.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

UNREACHABLE = math.inf
"""Distance reported for vertices not connected to any source."""

SUPPORTED_CYCLE_LENGTHS = (3, 4, 5, 6)


class GraphError(ValueError):
    """Malformed graph input or an operation on a non-existent edge."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield u, v

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def induced(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep``, relabelled densely.

        Returns the subgraph and the list mapping new ids to old ids.
        """
        old = sorted(set(keep))
        new_id = {v: i for i, v in enumerate(old)}
        adj = tuple(
            frozenset(new_id[w] for w in self.adj[v] if w in new_id) for v in old
        )
        return Graph(len(old), adj), old


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple undirected graph, rejecting loops and repeated edges."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(a) for a in adj))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Return a copy of ``g`` without the edge ``uv``."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] = adj[u] - {v}
    adj[v] = adj[v] - {u}
    return Graph(g.n, tuple(adj))


def distance_layers(
    g: Graph, sources: Iterable[int], max_depth: float = UNREACHABLE
) -> dict[int, float]:
    """Multi-source BFS distance from ``sources`` to every vertex.

    Vertices further than ``max_depth`` (or disconnected) get ``UNREACHABLE``.
    """
    src = set(sources)
    if not src:
        raise GraphError("distance layers need at least one source")
    dist: dict[int, float] = {v: UNREACHABLE for v in g.vertices}
    queue = deque()
    for s in src:
        dist[s] = 0
        queue.append(s)
    while queue:
        w = queue.popleft()
        d = dist[w]
        if d >= max_depth:
            continue
        for z in g.adj[w]:
            if dist[z] == UNREACHABLE:
                dist[z] = d + 1
                queue.append(z)
    return dist


def n_i(g: Graph, sources: Iterable[int], i: int) -> frozenset[int]:
    """Vertices whose distance to the nearest source is exactly ``i``."""
    if i < 0:
        raise GraphError(f"layer index must be nonnegative, got {i}")
    dist = distance_layers(g, sources, max_depth=i)
    return frozenset(v for v, d in dist.items() if d == i)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(not (g.adj[v] & s) for v in s)


def dominates(g: Graph, s: Iterable[int], t: Iterable[int]) -> bool:
    """True if every vertex of ``t`` is in ``s`` or has a neighbour in ``s``."""
    s = set(s)
    return all(w in s or not g.adj[w].isdisjoint(s) for w in t)


def is_maximal_independent(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return is_independent(g, s) and dominates(g, s, g.vertices)


def has_cycle_of_length(g: Graph, k: int) -> bool:
    """Whether ``g`` contains a simple cycle on exactly ``k`` vertices.

    Exact search with early exit.  For ``k = 5, 6`` every cycle is rooted at
    its smallest vertex, which keeps the path enumeration to O(n * maxdeg^(k-1)).
    """
    if k not in SUPPORTED_CYCLE_LENGTHS:
        raise GraphError(f"cycle length {k} not supported (use one of 3..6)")
    adj = g.adj
    if k == 3:
        return any(adj[u] & adj[v] for u, v in g.edges())
    if k == 4:
        # C4 exists iff some pair of vertices has two common neighbours.
        for w in g.vertices:
            seen: set[int] = set()
            for a in adj[w]:
                for b in adj[a]:
                    if b == w:
                        continue
                    if b in seen:
                        return True
                    seen.add(b)
        return False

    for root in g.vertices:
        # Path root = p0, p1, ..., p(k-1), all > root, closed by p(k-1) ~ root.
        stack = [(root, (root,))]
        while stack:
            last, path = stack.pop()
            if len(path) == k:
                if root in adj[last]:
                    return True
                continue
            for nxt in adj[last]:
                if nxt > root and nxt not in path:
                    stack.append((nxt, path + (nxt,)))
    return False


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return UNREACHABLE not in distance_layers(g, [0]).values()


def read_dimacs_graph(text: str) -> Graph:
    """Parse ``p edge n m`` / ``e u v`` text (1-based endpoints)."""
    n = m = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None or len(parts) != 4 or parts[1] != "edge":
                raise GraphError(f"line {lineno}: bad header {line!r}")
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphError(f"line {lineno}: bad header {line!r}") from None
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before header")
            if len(parts) != 3:
                raise GraphError(f"line {lineno}: bad edge line {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphError(f"line {lineno}: bad edge line {line!r}") from None
            edges.append((u - 1, v - 1))
        else:
            raise GraphError(f"line {lineno}: unrecognised line {line!r}")
    if n is None:
        raise GraphError("missing 'p edge' header")
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def write_dimacs_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p edge {g.n} {g.edge_count()}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
