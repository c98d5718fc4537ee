"""
Recurrences and closed forms
============================

Split a graph on one vertex two different ways, then compare the results
with enumeration and with the family formulas.
"""

from dompoly import brute_force, odot_recurrence, vertex_recurrence
from dompoly import families as fam
from dompoly.graph import odot, star_graph, wheel_graph, fan_graph

w = wheel_graph(9)
print("W_9 by enumeration  :", brute_force(w).poly)
print("W_9 split at the hub:", vertex_recurrence(w, 0).poly)
print("W_9 via odot at hub :", odot_recurrence(w, 0).poly)

# removing the edges among the hub's neighbors leaves a star
print("W_9 odot hub is K_1,8:", odot(w, 0) == star_graph(8))
print("closed form         :", fam.wheel(9))

# fans: the general formula at m = 2 against the built graph
for n in (3, 6, 9):
    print(f"F_2,{n}:", fam.fan(2, n) == brute_force(fan_graph(2, n)).poly, fam.fan(2, n))

# closed forms reach sizes enumeration never could
print("degree of D(G_3^200):", fam.dutch_windmill(200).degree)
