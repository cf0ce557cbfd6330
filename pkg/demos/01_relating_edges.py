"""
Relating edges on small graphs
==============================

An edge ``xy`` is relating when some independent set ``S`` avoiding both ends
turns into a maximal independent set by adding either ``x`` or ``y``.
"""

from relating import is_relating_brute, is_relating_poly, verify_relating_witness
from relating.graph import build_graph, cycle_graph, path_graph
from relating.oracle import enumerate_maximal_independent_sets, format_witness

# The 5-cycle 0-1-2-3-4-0 has five maximal independent sets, all of size 2.
c5 = cycle_graph(5)
print(sorted(sorted(s) for s in enumerate_maximal_independent_sets(c5)))

# For the edge 0-1, the set {3} works: {0, 3} and {1, 3} are both maximal.
w = is_relating_brute(c5, 0, 1)
print("C5, edge 0-1:", format_witness(w), "(1-based ids)")
print("verified:", verify_relating_witness(c5, 0, 1, w.s))

# On the path 0-1-2 nothing can dominate vertex 2 once 1 is left out,
# so 0-1 is not relating.
print("P3, edge 0-1:", format_witness(is_relating_brute(path_graph(3), 0, 1)))

# The flow-based decider gives the same answers on graphs without 4- and
# 6-cycles, and ships a witness whenever it says yes.
g = build_graph(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5), (5, 6), (6, 7)])
for x, y in g.edges():
    fast = is_relating_poly(g, x, y)
    slow = is_relating_brute(g, x, y)
    print(f"edge {x}-{y}: poly={fast is not None} brute={slow is not None}")
