"""
From CNF formulas to relating-edge queries
==========================================

Every CNF formula maps to a graph with no 4- or 5-cycles and a query edge
that is relating exactly when the formula is satisfiable.
"""

from relating.graph import has_cycle_of_length
from relating.oracle import is_relating_brute
from relating.reduction import (
    assignment_to_witness,
    brute_sat,
    normalize_cnf,
    parse_cnf,
    reduce,
    witness_to_assignment,
)

text = """c (x1 or not x2) and (x2 or x3) and (not x1 or not x3)
p cnf 3 3
1 -2 0
2 3 0
-1 -3 0
"""
f = normalize_cnf(parse_cnf(text))
art = reduce(f)
g = art.graph
print(f"{g.n} vertices, {g.edge_count()} edges")
print("C4:", has_cycle_of_length(g, 4), " C5:", has_cycle_of_length(g, 5))

phi = brute_sat(f)
print("satisfying assignment:", phi)

# The assignment picks one side of every variable triangle.
s = assignment_to_witness(art, phi)
names = {v: role for role, v in art.labels.items()}
print("witness:", sorted(names[v] for v in s))

# Going back: any witness found by search decodes to a satisfying assignment.
w = is_relating_brute(g, art.x, art.y)
decoded = witness_to_assignment(art, w.s)
print("decoded:", decoded, "satisfies:", f.satisfied_by(decoded))

# An unsatisfiable formula gives a non-relating edge.
unsat = reduce(parse_cnf("p cnf 1 2\n1 0\n-1 0\n"))
print("x1 and not x1 ->", is_relating_brute(unsat.graph, unsat.x, unsat.y))
