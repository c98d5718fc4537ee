"""
Roots in the right half-plane and sweep figures
===============================================

Windmill graphs with at least six blades have domination roots with a small
positive real part.  The last part writes a root sweep to CSV and SVG.
"""

import pathlib

from dompoly import families as fam
from dompoly.roots import deflate_zero, find_complex_roots, rhp_analysis
from dompoly.sweep import parse_sweep, run_sweep, sweep_csv, sweep_svg

for n in range(1, 11):
    found = find_complex_roots(deflate_zero(fam.dutch_windmill(n))[1])
    rhp = rhp_analysis(found.roots)
    print(f"G_3^{n}: max Re = {rhp.max_real_part:+.13f}  rhp={rhp.has_rhp_root}")

out = pathlib.Path("demo_output")
out.mkdir(exist_ok=True)
req = parse_sweep("knn:n=1..40")
results = run_sweep(req, jobs=2)
(out / "knn_roots.csv").write_text(sweep_csv(results, "knn"))
(out / "knn_roots.svg").write_text(sweep_svg(results, "Domination roots of K_n,n, 1 <= n <= 40", overlay_circle=True))
print("wrote", sorted(p.name for p in out.iterdir()))
