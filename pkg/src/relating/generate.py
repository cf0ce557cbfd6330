"""Seeded random instances: CNF formulas and graphs avoiding given cycle lengths."""

from __future__ import annotations

import itertools
import random

from .graph import Graph, build_graph, has_cycle_of_length
from .reduction import CnfFormula


class GenerationFailed(RuntimeError):
    pass


def random_cnf(n: int, m: int, k: int, rng: random.Random) -> CnfFormula:
    """``m`` clauses, each on ``k`` distinct variables with random signs."""
    if not 0 <= k <= n:
        raise ValueError(f"clause width {k} must lie in 0..{n}")
    clauses = []
    for _ in range(m):
        chosen = sorted(rng.sample(range(1, n + 1), k))
        clauses.append(frozenset((v, rng.random() < 0.5) for v in chosen))
    return CnfFormula(n, tuple(clauses))


def _free_of(g: Graph, forbid) -> bool:
    return not any(has_cycle_of_length(g, k) for k in forbid)


def random_graph(
    n: int, p: float, rng: random.Random, forbid=(), attempts: int = 1000
) -> Graph:
    """G(n, p) sample, redrawn until it has no cycle of a forbidden length."""
    pairs = list(itertools.combinations(range(n), 2))
    for _ in range(attempts):
        g = build_graph(n, [e for e in pairs if rng.random() < p])
        if _free_of(g, forbid):
            return g
    raise GenerationFailed(
        f"no graph avoiding cycle lengths {sorted(forbid)} in {attempts} attempts"
    )


def _closes_cycle(g: Graph, u: int, v: int, length: int) -> bool:
    # Is there a simple u-v path with length - 1 edges?
    stack = [(u, (u,))]
    while stack:
        last, path = stack.pop()
        if len(path) == length:
            if last == v:
                return True
            continue
        for z in g.adj[last]:
            if z in path or (z == v and len(path) != length - 1):
                continue
            stack.append((z, path + (z,)))
    return False


def grow_graph(n: int, edges: int, rng: random.Random, forbid=()) -> Graph:
    """Add random edges one at a time, skipping any that would close a
    cycle of a forbidden length, until ``edges`` edges or no pair is left."""
    pairs = list(itertools.combinations(range(n), 2))
    rng.shuffle(pairs)
    g = build_graph(n, [])
    chosen: list[tuple[int, int]] = []
    for u, v in pairs:
        if len(chosen) >= edges:
            break
        if any(_closes_cycle(g, u, v, k) for k in forbid):
            continue
        chosen.append((u, v))
        g = build_graph(n, chosen)
    return g


def high_girth_graph(n: int, chords: int, rng: random.Random, girth: int = 8) -> Graph:
    """Random recursive tree plus up to ``chords`` extra edges, each added only
    between vertices at distance >= ``girth - 1``, so no cycle is shorter
    than ``girth``."""
    adj: list[set[int]] = [set() for _ in range(n)]
    for v in range(1, n):
        p = rng.randrange(v)
        adj[v].add(p)
        adj[p].add(v)
    limit = girth - 2
    tries = 0
    added = 0
    while added < chords and tries < 20 * chords:
        tries += 1
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or v in adj[u]:
            continue
        # Bounded BFS from u; reject if v is within girth - 2 steps.
        frontier, seen = {u}, {u}
        for _ in range(limit):
            frontier = {z for w in frontier for z in adj[w]} - seen
            seen |= frontier
        if v in seen:
            continue
        adj[u].add(v)
        adj[v].add(u)
        added += 1
    return Graph(n, tuple(frozenset(a) for a in adj))
