"""
Recovering D(G, x) from one evaluation point
============================================

Evaluating D(G o K_t, x) at a single value lam for t = 1..n+1 is enough to
rebuild D(G, x), as long as lam is not -2, -1 or 0.
"""

from fractions import Fraction

from dompoly.errors import InterpolationError
from dompoly.graph import cycle_graph
from dompoly.reduction import interpolation_demo

g = cycle_graph(5)
for lam in (Fraction(1), Fraction(-3), Fraction(1, 2)):
    r = interpolation_demo(g, lam, "C_5")
    print(f"lam={lam}: nodes {[str(v) for v in r.nodes[:3]]}... rebuilt {r.reconstructed}")
    print("   constructive check on the composed graphs:", r.constructive_match)

# at lam = -1 every node is -1
try:
    interpolation_demo(g, -1, "C_5")
except InterpolationError as exc:
    print("rejected:", exc)
