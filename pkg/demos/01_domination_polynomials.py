"""
Counting dominating sets
========================

Build a few small graphs and count their dominating sets by size.
"""

from dompoly import brute_force
from dompoly.engine import domination_number
from dompoly.graph import complete_graph, cycle_graph, parse_family, build_family, path_graph

# every nonempty subset of K_3 dominates it
print("K_3:", brute_force(complete_graph(3)).poly)

# on a path only the middle vertex dominates alone
d = brute_force(path_graph(3)).poly
print("P_3:", d, " gamma =", domination_number(d))

# C_4 needs two vertices; six of the 2-sets work
print("C_4:", brute_force(cycle_graph(4)).poly)

# families are addressed by short strings
g = build_family(parse_family("windmill:n=2"))
print("windmill n=2 has", g.vertex_count, "vertices:", brute_force(g).poly)

# D(G, 1) counts all dominating sets
print("dominating sets of C_10:", brute_force(cycle_graph(10)).poly(1))
