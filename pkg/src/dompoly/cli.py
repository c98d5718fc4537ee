"""Command-line entry point: ``dompoly {poly,roots,sweep,interp-demo,verify,export-triangle}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import families as fam
from .engine import MAX_ENUMERATION_VERTICES, Method, brute_force, odot_recurrence, vertex_recurrence
from .errors import BudgetExceededError, InterpolationError
from .graph import FamilySpec, Graph, build_family, family_vertex_count, parse_edge_list, parse_family
from .poly import IntPolynomial
from .reduction import interpolation_demo
from .roots import root_report
from .sweep import parse_sweep, run_sweep, sweep_csv, sweep_svg
from .verify import run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_input(text: str) -> tuple[str, Graph | None, FamilySpec | None]:
    """A family string (``fan:m=2,n=10``) or a path to an edge-list file."""
    if os.path.exists(text):
        with open(text) as fh:
            return text, parse_edge_list(fh.read()), None
    try:
        spec = parse_family(text)
    except ValueError as exc:
        raise UsageError(f"{text!r} is neither an existing file nor a family: {exc}") from None
    return spec.label, None, spec


def compute_poly(text: str, method: str, max_n: int) -> tuple[str, IntPolynomial, str]:
    name, graph, spec = load_input(text)
    if method == "auto":
        method = Method.CLOSED_FORM.value if spec is not None else Method.BRUTE_FORCE.value
    if method == Method.CLOSED_FORM.value:
        if spec is None:
            raise UsageError("closed-form needs a family input, not an edge list")
        return name, fam.closed_form(spec).poly, method
    if graph is None:
        n = family_vertex_count(spec)
        if n > max_n:
            raise BudgetExceededError(f"{name} has {n} vertices, above --max-n={max_n}")
        graph = build_family(spec)
    if method == Method.BRUTE_FORCE.value:
        poly = brute_force(graph, budget=max_n).poly
    elif method == Method.VERTEX_RECURRENCE.value:
        poly = vertex_recurrence(graph, budget=max_n).poly
    elif method == Method.ODOT_RECURRENCE.value:
        poly = odot_recurrence(graph, solver=lambda h: brute_force(h, budget=max_n).poly).poly
    else:
        raise UsageError(f"unknown method {method!r}")
    return name, poly, method


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_poly(args) -> int:
    name, poly, method = compute_poly(args.input, args.method, args.max_n)
    if args.format == "csv":
        text = "degree,coefficient\n" + "".join(f"{i},{c}\n" for i, c in enumerate(poly.coeffs))
    else:
        text = json.dumps({"graph": name, "method": method, "coefficients": poly.to_strings()}) + "\n"
    _write(text, args.out)
    return EXIT_OK


def cmd_roots(args) -> int:
    name, poly, _ = compute_poly(args.input, args.method, args.max_n)
    report = root_report(poly, certify=args.certify, limit_curves=args.limit_curves, seed=args.seed)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["re", "im", "residual", "family", "param"])
        param = ";".join(f"{k}={v}" for k, v in parse_family(name).params.items()) if ":" in name else ""
        for _ in range(report.zero_root_multiplicity):
            w.writerow([repr(0.0), repr(0.0), repr(0.0), name, param])
        for z, r in zip(report.roots, report.residuals):
            w.writerow([repr(float(z.real)), repr(float(z.imag)), repr(float(r)), name, param])
        text = buf.getvalue()
    else:
        data = {"graph": name, "coefficients": poly.to_strings(), **report.to_dict()}
        text = json.dumps(data, indent=1) + "\n"
    _write(text, args.out)
    return EXIT_OK if report.converged else EXIT_FAIL


def cmd_sweep(args) -> int:
    req = parse_sweep(args.family)
    results = run_sweep(req, seed=args.seed, jobs=args.jobs)
    if args.format == "svg":
        overlay = args.overlay or req.template.kind.value == "knn"
        text = sweep_svg(results, f"Domination roots of {req.label}", overlay)
    elif args.format == "json":
        text = json.dumps([
            {"param": r.param, "error": r.error,
             "roots": [[float(z.real), float(z.imag)] for z in r.roots]}
            for r in results
        ]) + "\n"
    else:
        text = sweep_csv(results, req.template.kind.value)
    _write(text, args.out)
    return EXIT_OK


def cmd_interp_demo(args) -> int:
    name, graph, spec = load_input(args.input)
    if graph is None:
        graph = build_family(spec)
    try:
        lam = Fraction(args.lam)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"lambda must be a rational like 2, -3 or 1/2, got {args.lam!r}") from None
    result = interpolation_demo(graph, lam, name)
    _write(json.dumps(result.to_dict(), indent=1) + "\n", args.out)
    return EXIT_OK if result.match else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        checks = run_suites(args.suites or ["all"])
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    report = {"passed": all(c.passed for c in checks), "checks": [c.to_dict() for c in checks]}
    _write(json.dumps(report, indent=1) + "\n", args.out)
    for c in checks:
        print(f"{'PASS' if c.passed else 'FAIL'} {c.name} {c.params} {c.seconds:.2f}s", file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_export_triangle(args) -> int:
    req = parse_sweep(args.family)
    rows = fam.coefficient_rows(req.specs())
    if args.format == "bfile":
        text = fam.triangle_bfile(rows)
    else:
        text = fam.triangle_csv(rows, req.free)
    _write(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dompoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default):
        p.add_argument("--out", help="write to this file instead of stdout")
        p.add_argument("--format", choices=formats, default=default)

    methods = ["auto"] + [m.value for m in Method if m is not Method.PATH_CYCLE_RECURRENCE]

    p = sub.add_parser("poly", help="domination polynomial of a family member or edge-list file")
    p.add_argument("input")
    p.add_argument("--method", choices=methods, default="auto")
    p.add_argument("--max-n", type=int, default=MAX_ENUMERATION_VERTICES)
    common(p, ["json", "csv"], "json")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("roots", help="root report")
    p.add_argument("input")
    p.add_argument("--method", choices=methods, default="auto")
    p.add_argument("--max-n", type=int, default=MAX_ENUMERATION_VERTICES)
    p.add_argument("--certify", action="store_true", help="exact real-root count and isolation")
    p.add_argument("--limit-curves", action="store_true", help="distance of each root to the K_{n,n} limit loci")
    p.add_argument("--seed", type=int, default=0)
    common(p, ["json", "csv"], "json")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("sweep", help="roots across a parameter range, e.g. star:n=1..60")
    p.add_argument("family")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--overlay", action="store_true", help="draw the circle |z+1|=1")
    common(p, ["csv", "json", "svg"], "csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("interp-demo", help="rebuild D(G,x) from evaluations at one point")
    p.add_argument("input")
    p.add_argument("--lambda", dest="lam", default="1")
    common(p, ["json"], "json")
    p.set_defaults(func=cmd_interp_demo)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suites", nargs="*", help="suite names, or 'all'")
    common(p, ["json"], "json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-triangle", help="coefficient rows, e.g. pendant-windmill:n=1..20")
    p.add_argument("family")
    common(p, ["csv", "bfile"], "csv")
    p.set_defaults(func=cmd_export_triangle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, InterpolationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
