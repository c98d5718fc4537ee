"""Root sweeps over a family parameter, with CSV and SVG output."""

from __future__ import annotations

import csv
import io
import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .families import closed_form
from .graph import FamilySpec, parse_kind, PARAM_RULES
from .roots import deflate_zero, find_complex_roots

CSV_FIELDS = ["family", "param", "re", "im", "residual", "error"]


@dataclass(frozen=True)
class SweepRequest:
    """A family with one free parameter running over ``lo..hi`` inclusive."""

    template: FamilySpec  # free parameter set to ``lo``
    free: str
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty sweep range")

    def specs(self) -> list[FamilySpec]:
        return [self.template.with_params(**{self.free: v}) for v in range(self.lo, self.hi + 1)]

    @property
    def label(self) -> str:
        fixed = {k: v for k, v in self.template.params.items() if k != self.free}
        parts = [f"{k}={v}" for k, v in fixed.items()] + [f"{self.free}={self.lo}..{self.hi}"]
        return f"{self.template.kind.value}:" + ",".join(parts)


_RANGE = re.compile(r"^\s*([a-z]+)\s*=\s*(\d+)\s*\.\.\s*(\d+)\s*$")


def parse_sweep(text: str) -> SweepRequest:
    """Parse e.g. ``"star:n=1..60"`` or ``"fan:m=2,n=1..30"`` (exactly one range)."""
    kind_text, _, rest = text.partition(":")
    kind = parse_kind(kind_text)
    params, free = {}, None
    for item in filter(None, (p.strip() for p in rest.split(","))):
        m = _RANGE.match(item)
        if m:
            if free is not None:
                raise ValueError("only one parameter may range")
            free, lo, hi = m.group(1), int(m.group(2)), int(m.group(3))
            params[free] = lo
        else:
            name, _, value = item.partition("=")
            params[name.strip()] = int(value)
    if free is None:
        missing = set(PARAM_RULES[kind]) - set(params)
        raise ValueError(f"no ranged parameter in {text!r} (expected e.g. n=1..30; missing {missing})")
    return SweepRequest(FamilySpec(kind, params), free, lo, hi)


@dataclass
class InstanceRoots:
    spec: FamilySpec
    param: int
    roots: np.ndarray
    residuals: np.ndarray
    converged: bool
    error: str = ""


def instance_roots(spec: FamilySpec, param: int, seed: int = 0) -> InstanceRoots:
    """All domination roots of one family member, the zero root included."""
    try:
        p = closed_form(spec).poly
        k, q = deflate_zero(p)
        if q.degree >= 1:
            found = find_complex_roots(q, seed=seed)
            roots, res, ok = found.roots, found.residuals, found.converged
        else:
            roots, res, ok = np.zeros(0, complex), np.zeros(0), True
        roots = np.concatenate([np.zeros(k, complex), roots])
        res = np.concatenate([np.zeros(k), res])
        return InstanceRoots(spec, param, roots, res, ok, "" if ok else "not converged")
    except Exception as exc:  # recorded per instance; the sweep continues
        return InstanceRoots(spec, param, np.zeros(0, complex), np.zeros(0), False,
                             f"{type(exc).__name__}: {exc}")


def _run_one(args):
    return instance_roots(*args)


def run_sweep(req: SweepRequest, seed: int = 0, jobs: int = 1) -> list[InstanceRoots]:
    """Roots for every instance, ordered by parameter whatever the completion order."""
    work = [(s, s[req.free], seed) for s in req.specs()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_one, work))
    return [_run_one(w) for w in work]


def fmt(v: float) -> str:
    return repr(float(v))


def sweep_csv(results: list[InstanceRoots], family: str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in results:
        if r.error and not r.roots.size:
            w.writerow([family, r.param, "", "", "", r.error])
            continue
        for z, res in zip(r.roots, r.residuals):
            w.writerow([family, r.param, fmt(z.real), fmt(z.imag), fmt(res), r.error])
    return buf.getvalue()


def scatter_svg(
    points: list[tuple[str, str]],
    title: str = "",
    overlay_circle: bool = False,
    size: int = 800,
) -> str:
    """Scatter of ``(re, im)`` given as the exact strings written to CSV.

    The window is symmetric about the real axis, fitted to the data with a 5%
    margin and drawn at equal aspect.  Each point carries its CSV strings in
    ``data-re`` / ``data-im`` attributes.
    """
    xs = [float(a) for a, _ in points] or [0.0]
    ys = [float(b) for _, b in points] or [0.0]
    x0, x1 = min(xs + [0.0]), max(xs + [0.0])
    ymax = max(abs(y) for y in ys)
    if overlay_circle:
        x0, x1, ymax = min(x0, -2.0), max(x1, 0.0), max(ymax, 1.0)
    span = max(x1 - x0, 2 * ymax, 1e-9) * 1.10
    cx, cy = (x0 + x1) / 2, 0.0
    pad = 40
    scale = (size - 2 * pad) / span

    def px(x):
        return pad + (x - (cx - span / 2)) * scale

    def py(y):
        return pad + ((cy + span / 2) - y) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
        f'<text x="{size / 2:.1f}" y="24" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{title}</text>',
    ]
    lo, hi = cx - span / 2, cx + span / 2
    out.append(f'<line x1="{pad}" y1="{py(0):.3f}" x2="{size - pad}" y2="{py(0):.3f}" stroke="#888"/>')
    if lo <= 0 <= hi:
        out.append(f'<line x1="{px(0):.3f}" y1="{pad}" x2="{px(0):.3f}" y2="{size - pad}" stroke="#888"/>')
    for t in _ticks(lo, hi):
        out.append(f'<text x="{px(t):.3f}" y="{py(0) + 14:.3f}" font-family="sans-serif" '
                   f'font-size="10" text-anchor="middle">{t:g}</text>')
    for t in _ticks(-span / 2, span / 2):
        if t:
            out.append(f'<text x="{px(0) + 4 if lo <= 0 <= hi else pad:.3f}" y="{py(t) + 3:.3f}" '
                       f'font-family="sans-serif" font-size="10">{t:g}i</text>')
    if overlay_circle:
        out.append(f'<circle cx="{px(-1):.3f}" cy="{py(0):.3f}" r="{scale:.3f}" fill="none" '
                   f'stroke="#c33" stroke-dasharray="4 3"/>')
    for a, b in points:
        out.append(f'<circle cx="{px(float(a)):.3f}" cy="{py(float(b)):.3f}" r="2" fill="#1f4e9c" '
                   f'data-re="{a}" data-im="{b}"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _ticks(lo: float, hi: float, target: int = 8) -> list[float]:
    raw = (hi - lo) / target
    step = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 5, 10):
        if raw <= m * step:
            step *= m
            break
    first = math.ceil(lo / step) * step
    return [round(first + i * step, 12) for i in range(int((hi - first) / step) + 1)]


def sweep_svg(results: list[InstanceRoots], title: str, overlay_circle: bool = False) -> str:
    points = [(fmt(z.real), fmt(z.imag)) for r in results for z in r.roots]
    return scatter_svg(points, title, overlay_circle)
