"""
Well-covered graphs without 4-cycles
====================================

In a well-covered graph with no 4-cycle, an edge whose ends are not related
can be deleted without changing the maximal independent set sizes.
"""

import networkx as nx

from relating.graph import build_graph, delete_edge, has_cycle_of_length
from relating.oracle import independence_number, is_relating_brute, is_well_covered

shown = 0
for G in nx.graph_atlas_g()[1:]:
    g = build_graph(G.number_of_nodes(), list(G.edges()))
    if has_cycle_of_length(g, 4) or not is_well_covered(g):
        continue
    for x, y in g.edges():
        if is_relating_brute(g, x, y) is None:
            h = delete_edge(g, x, y)
            print(
                f"{list(g.edges())} minus {x}-{y}: well-covered {is_well_covered(h)}, "
                f"alpha {independence_number(g)} -> {independence_number(h)}"
            )
            shown += 1
    if shown >= 6:
        break
