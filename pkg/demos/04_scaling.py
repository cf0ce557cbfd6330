"""
Query time on large sparse graphs
=================================

With the cycle check skipped, one query only looks at the neighbourhood of
the edge plus a linear sweep to extend the witness.
"""

import random
import time

from relating.generate import high_girth_graph
from relating.poly import is_relating_poly

for n in (1_000, 10_000, 100_000):
    rng = random.Random(n)
    g = high_girth_graph(n, n // 10, rng)
    edges = rng.sample(list(g.edges()), 10)
    start = time.perf_counter()
    answers = [is_relating_poly(g, x, y, trust_cycle_free=True) for x, y in edges]
    per_query = (time.perf_counter() - start) / len(edges)
    relating = sum(a is not None for a in answers)
    print(f"n={n:>7}: {per_query * 1e3:7.2f} ms/query, {relating}/10 relating")
