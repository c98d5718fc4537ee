"""Verification suites for the closed forms and root results, run by ``dompoly verify``.

Each suite returns a list of :class:`Check` records; failures are data, not
exceptions.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import families as fam
from .engine import (
    brute_force,
    cycle_poly,
    odot_recurrence,
    path_poly,
    vertex_recurrence,
)
from .errors import InterpolationError
from .graph import (
    FamilyKind,
    FamilySpec,
    Graph,
    build_family,
    compose_clique,
    cycle_graph,
    family_vertex_count,
    path_graph,
    star_graph,
)
from .reduction import interpolation_demo
from .roots import (
    deflate_zero,
    find_complex_roots,
    isolate_real_roots,
    nonzero_real_root_count,
    rhp_analysis,
    star_real_root_locate,
)
from .sweep import parse_sweep, run_sweep

RESIDUAL_LIMIT = 1e-10
REMARK_REAL_PART = 0.0003550296365
REMARK_TOL = 1e-8


@dataclass
class Check:
    name: str
    passed: bool
    params: dict = field(default_factory=dict)
    seconds: float = 0.0
    detail: str = ""

    def __post_init__(self):
        self.passed = bool(self.passed)

    def to_dict(self) -> dict:
        return asdict(self)


def random_graph(n: int, rng: random.Random, density: float | None = None) -> Graph:
    p = rng.random() if density is None else density
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def family_specs(max_vertices: int = 16) -> list[FamilySpec]:
    """Every family member with at most ``max_vertices`` vertices."""
    out = []
    for kind in FamilyKind:
        for n in range(1, max_vertices + 1):
            for second in range(1, max_vertices + 1):
                if kind is FamilyKind.FAN:
                    params = {"m": second, "n": n}
                elif kind is FamilyKind.CLIQUE_COMPOSITION:
                    params = {"n": n, "t": second}
                elif second == 1:
                    params = {"n": n}
                else:
                    continue
                try:
                    spec = FamilySpec(kind, params)
                except ValueError:
                    continue
                if family_vertex_count(spec) <= max_vertices:
                    out.append(spec)
    return out


def _timed(name: str, fn: Callable[[], tuple[bool, dict, str]]) -> Check:
    t = time.perf_counter()
    try:
        ok, params, detail = fn()
    except Exception as exc:
        ok, params, detail = False, {}, f"{type(exc).__name__}: {exc}"
    return Check(name, ok, params, round(time.perf_counter() - t, 4), detail)


def suite_closed_forms(max_vertices: int = 16) -> list[Check]:
    def run():
        specs = family_specs(max_vertices)
        bad = [s.label for s in specs if fam.closed_form(s).poly != brute_force(build_family(s)).poly]
        return not bad, {"instances": len(specs)}, f"mismatches: {bad}" if bad else ""
    return [_timed("closed-forms", run)]


def suite_recurrences(count: int = 200, max_n: int = 10, seed: int = 0) -> list[Check]:
    def run():
        rng = random.Random(seed)
        bad = []
        for i in range(count):
            g = random_graph(rng.randint(1, max_n), rng)
            d = brute_force(g).poly
            for v in range(g.vertex_count):
                if vertex_recurrence(g, v).poly != d:
                    bad.append(("vertex", i, v))
                if odot_recurrence(g, v).poly != d:
                    bad.append(("odot", i, v))
        return not bad, {"graphs": count, "max_n": max_n, "seed": seed}, f"{bad[:5]}" if bad else ""
    return [_timed("recurrences", run)]


def suite_composition(limit: int = 16, seed: int = 0) -> list[Check]:
    def run():
        rng = random.Random(seed)
        graphs = [path_graph(4), cycle_graph(5), star_graph(3)]
        graphs += [random_graph(rng.randint(1, 8), rng) for _ in range(40)]
        cases = 0
        bad = []
        for g in graphs:
            d = brute_force(g).poly
            for t in range(1, limit // max(g.vertex_count, 1) + 1):
                cases += 1
                if fam.compose_with_clique_poly(d, t) != brute_force(compose_clique(g, t)).poly:
                    bad.append((repr(g), t))
        return not bad, {"cases": cases}, f"{bad[:3]}" if bad else ""
    return [_timed("composition", run)]


def suite_interpolation() -> list[Check]:
    checks = []
    graphs = {"P_4": path_graph(4), "C_5": cycle_graph(5), "K_1,4": star_graph(4)}
    for name, g in graphs.items():
        for lam in (Fraction(1), Fraction(2), Fraction(-3), Fraction(1, 2)):
            def run(g=g, lam=lam, name=name):
                r = interpolation_demo(g, lam, name)
                return r.match, {"graph": name, "lambda": str(lam)}, ""
            checks.append(_timed("interpolation", run))
    for lam in (-2, -1, 0):
        def rejected(lam=lam):
            try:
                interpolation_demo(path_graph(4), lam, "P_4")
            except InterpolationError as exc:
                return "collide" in str(exc), {"lambda": str(lam)}, str(exc)
            return False, {"lambda": str(lam)}, "not rejected"
        checks.append(_timed("interpolation-rejects", rejected))
    return checks


def suite_knn_real_roots(max_n: int = 20) -> list[Check]:
    def run():
        counts = {n: nonzero_real_root_count(fam.balanced_complete_bipartite(n)) for n in range(2, max_n + 1, 2)}
        return all(c == 0 for c in counts.values()), {"even_n_up_to": max_n}, f"counts={counts}"
    return [_timed("knn-real-roots", run)]


def suite_windmill_real_roots(max_n: int = 15) -> list[Check]:
    def run():
        counts = {n: nonzero_real_root_count(fam.dutch_windmill(n)) for n in range(1, max_n + 1, 2)}
        return all(c == 0 for c in counts.values()), {"odd_n_up_to": max_n}, f"counts={counts}"
    return [_timed("windmill-real-roots", run)]


def suite_pendant_windmill_real_root(max_n: int = 20) -> list[Check]:
    def run():
        bad = []
        for n in range(1, max_n + 1):
            _, q = deflate_zero(fam.pendant_windmill(n))
            iv = isolate_real_roots(q)
            window = (-1, 0) if n % 2 else (-2, -1)
            if len(iv) != 1 or not (window[0] <= iv[0][0] and iv[0][1] <= window[1]):
                bad.append(n)
        return not bad, {"n_up_to": max_n}, f"failing n: {bad}" if bad else ""
    return [_timed("pendant-windmill-real-root", run)]


def suite_windmill_rhp(max_n: int = 15) -> list[Check]:
    def run():
        rep = {}
        closest = None
        for n in range(1, max_n + 1):
            found = find_complex_roots(deflate_zero(fam.dutch_windmill(n))[1])
            rep[n] = rhp_analysis(found.roots)
            if n == 6:
                closest = min(abs(z.real - REMARK_REAL_PART) for z in found.roots)
        ok = closest is not None and closest <= REMARK_TOL
        ok &= all(rep[n].has_rhp_root for n in range(6, max_n + 1))
        detail = ", ".join(f"n={n}: max Re={r.max_real_part:.6g}" for n, r in rep.items() if n <= 5)
        return ok, {"remark_distance": closest}, detail
    return [_timed("windmill-rhp", run)]


def suite_star_real_root(lo: int = 10, hi: int = 60) -> list[Check]:
    def run():
        bad = []
        for n in range(lo, hi + 1):
            loc = star_real_root_locate(n)
            a, b = loc.leftmost
            if not (loc.in_window[0] and b - a <= Fraction(1, 10**9)):
                bad.append(n)
        return not bad, {"n_range": [lo, hi]}, f"failing n: {bad}" if bad else ""
    return [_timed("star-real-root", run)]


FIGURE_SWEEPS = [
    "star:n=1..60",
    "knn:n=1..40",
    "windmill:n=1..30",
    "windmill-clique:n=8,t=8..8",
    "pendant-windmill:n=1..30",
    "fan:m=2,n=1..30",
    "gem-edge:n=1..30",
    "wheel:n=4..30",
]


def suite_figures(jobs: int = 1) -> list[Check]:
    checks = []
    for text in FIGURE_SWEEPS:
        def run(text=text):
            results = run_sweep(parse_sweep(text), jobs=jobs)
            worst = max(float(r.residuals.max(initial=0.0)) for r in results)
            errors = [r.param for r in results if r.error]
            ok = not errors and worst < RESIDUAL_LIMIT
            return ok, {"sweep": text, "instances": len(results), "max_residual": worst}, \
                f"errors at {errors}" if errors else ""
        checks.append(_timed("figures", run))
    return checks


def suite_recurrence_bases(limit: int = 18) -> list[Check]:
    def run():
        bad = [("path", n) for n in range(1, limit + 1)
               if path_poly(n).poly != brute_force(path_graph(n)).poly]
        bad += [("cycle", n) for n in range(3, limit + 1)
                if cycle_poly(n).poly != brute_force(cycle_graph(n)).poly]
        return not bad, {"n_up_to": limit}, f"{bad}" if bad else ""
    return [_timed("recurrence-bases", run)]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "closed-forms": suite_closed_forms,
    "recurrences": suite_recurrences,
    "composition": suite_composition,
    "interpolation": suite_interpolation,
    "knn-real-roots": suite_knn_real_roots,
    "windmill-real-roots": suite_windmill_real_roots,
    "pendant-windmill-real-root": suite_pendant_windmill_real_root,
    "windmill-rhp": suite_windmill_rhp,
    "star-real-root": suite_star_real_root,
    "figures": suite_figures,
    "recurrence-bases": suite_recurrence_bases,
}


def run_suites(names: list[str]) -> list[Check]:
    if "all" in names:
        names = list(SUITES)
    out = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
        out.extend(SUITES[name]())
    return out
