"""
Exact real-root certification
=============================

Sturm sequences over the integers count real roots with no rounding at all.
"""

import math

from dompoly import families as fam
from dompoly.roots import isolate_real_roots, deflate_zero, nonzero_real_root_count, star_real_root_locate

for n in range(2, 21, 2):
    print(f"K_{n},{n}: nonzero real roots =", nonzero_real_root_count(fam.balanced_complete_bipartite(n)))

for n in (1, 2, 7, 8):
    _, q = deflate_zero(fam.pendant_windmill(n))
    (lo, hi), = isolate_real_roots(q)
    print(f"pendant windmill n={n}: single real root in ({float(lo):.9f}, {float(hi):.9f}]")

# the star family has a negative real root between -2n and -ln n
for n in (3, 10, 60):
    loc = star_real_root_locate(n)
    lo, hi = loc.leftmost
    print(f"K_1,{n}: leftmost root ~ {float(hi):.6f}, window ({-2 * n}, {-math.log(n):.4f}), inside={loc.in_window[0]}")
