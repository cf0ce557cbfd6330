"""
Inside the flow-based decider
=============================

For each endpoint ``v`` of the query edge the decider collects the private
neighbours ``m1`` that a witness must dominate and the candidate dominators
``m2``, then solves a small unit-capacity flow problem.
"""

from relating.flow import max_flow
from relating.graph import build_graph
from relating.poly import build_side_network, decompose_side, side_dominating_set

# Query edge 0-1.  Vertex 0 has private neighbours 2 and 3; each of them has
# pendant candidates, and 4-5 form a two-vertex component.
g = build_graph(
    9,
    [(0, 1), (0, 2), (0, 3), (2, 4), (3, 5), (4, 5), (3, 6), (1, 7), (7, 8)],
)

d = decompose_side(g, 0, 1)
print("m1:", sorted(d.m1))
print("m2:", sorted(d.m2))
print("components:", [sorted(c) for c in d.components])
print("attach:", d.attach)

net, back = build_side_network(d)
res = max_flow(net)
print(f"network: {net.node_count} nodes, flow value {res.value}")
print(res.dump(net), end="")

# Flow equal to |m1| means every private neighbour got its own component.
print("chosen dominators:", sorted(side_dominating_set(g, d)))

# The other side: vertex 1 has private neighbour 7, dominated by 8.
print("other side:", sorted(side_dominating_set(g, decompose_side(g, 1, 0))))
