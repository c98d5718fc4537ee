"""Closed-form domination polynomials for the named graph families.

Every formula here has a constructor in :mod:`dompoly.graph`, and the test
suite checks each one against enumeration on the built graph.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Iterable

from .engine import cycle_poly, path_poly
from .graph import FamilyKind, FamilySpec, family_vertex_count
from .poly import IntPolynomial

X = IntPolynomial.x()

# OEIS entries that register the coefficient triangles; metadata only.
OEIS_IDS = {
    FamilyKind.PENDANT_DUTCH_WINDMILL: "A213658",
    FamilyKind.FAN: "A213657",
    FamilyKind.GEM: "A213662",
    FamilyKind.TRIANGLE_ON_CYCLE: "A213664",
}


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _opx(k: int) -> IntPolynomial:
    return IntPolynomial.one_plus_x_pow(k)


def star(n: int) -> IntPolynomial:
    """K_{1,n}: ``x^n + x (1+x)^n``."""
    _require(n >= 1, "star needs n >= 1")
    return IntPolynomial.monomial(n) + X * _opx(n)


def join_formula(p1: IntPolynomial, n1: int, p2: IntPolynomial, n2: int) -> IntPolynomial:
    """Domination polynomial of ``G1 + G2`` from those of the parts and their orders.

    Both parts must be nonempty; with an empty part the join is just the other graph.
    """
    _require(n1 >= 1 and n2 >= 1, "join formula needs two nonempty graphs")
    if p1.degree != n1 or p2.degree != n2:
        raise ValueError(
            f"degree mismatch: deg p1={p1.degree} vs n1={n1}, deg p2={p2.degree} vs n2={n2}"
        )
    return (_opx(n1) - 1) * (_opx(n2) - 1) + p1 + p2


def balanced_complete_bipartite(n: int) -> IntPolynomial:
    """K_{n,n}: ``((1+x)^n - 1)^2 + 2 x^n``."""
    _require(n >= 1, "K_{n,n} needs n >= 1")
    return (_opx(n) - 1) ** 2 + IntPolynomial.monomial(n, 2)


def dutch_windmill(n: int) -> IntPolynomial:
    """G_3^n: ``(2x + x^2)^n + x (1+x)^{2n}``."""
    _require(n >= 1, "windmill needs n >= 1")
    return IntPolynomial((0, 2, 1)) ** n + X * _opx(2 * n)


def compose_with_clique_poly(p: IntPolynomial, t: int) -> IntPolynomial:
    """Domination polynomial of ``G o K_t`` given ``p = D(G)``: substitute ``(1+x)^t - 1``."""
    _require(t >= 1, "clique size t must be >= 1")
    return p.compose(_opx(t) - 1)


def windmill_clique(n: int, t: int) -> IntPolynomial:
    """G_3^n o K_t: ``((1+x)^{2t} - 1)^n + ((1+x)^t - 1)(1+x)^{2nt}``."""
    _require(n >= 1 and t >= 1, "windmill o K_t needs n, t >= 1")
    return (_opx(2 * t) - 1) ** n + (_opx(t) - 1) * _opx(2 * n * t)


def pendant_windmill(n: int) -> IntPolynomial:
    """Windmill with a pendant at the center: ``x ((x^2+2x)^n + (x+1)^{2n+1})``."""
    _require(n >= 1, "pendant windmill needs n >= 1")
    return X * (IntPolynomial((0, 2, 1)) ** n + _opx(2 * n + 1))


def fan(m: int, n: int) -> IntPolynomial:
    """F_{m,n} = empty(m) + P_n: ``((1+x)^m-1)((1+x)^n-1) + x^m + D(P_n)``."""
    _require(m >= 1 and n >= 1, "fan needs m, n >= 1")
    return (_opx(m) - 1) * (_opx(n) - 1) + IntPolynomial.monomial(m) + path_poly(n).poly


def gem(n: int) -> IntPolynomial:
    """Hub joined to every vertex of P_{n+1}: ``D(P_{n+1}) + x (1+x)^{n+1}``."""
    _require(n >= 1, "gem needs n >= 1")
    return path_poly(n + 1).poly + X * _opx(n + 1)


def gem_plus_edge(n: int) -> IntPolynomial:
    """Gem with a pendant at the hub: ``x (D(P_{n+1}) + (1+x)^{n+2})``."""
    _require(n >= 1, "gem plus edge needs n >= 1")
    return X * (path_poly(n + 1).poly + _opx(n + 2))


def triangle_on_cycle(n: int) -> IntPolynomial:
    """C_n with a triangle on one edge: ``D(C_n) + D(C_{n+1}) - D(P_n)``."""
    _require(n >= 3, "triangle on cycle needs n >= 3")
    return cycle_poly(n).poly + cycle_poly(n + 1).poly - path_poly(n).poly


def wheel(n: int) -> IntPolynomial:
    """W_n (hub plus C_{n-1}): ``D(C_{n-1}) + x (1+x)^{n-1}``."""
    _require(n >= 4, "wheel needs n >= 4")
    return cycle_poly(n - 1).poly + X * _opx(n - 1)


@dataclass(frozen=True)
class ClosedFormResult:
    spec: FamilySpec
    poly: IntPolynomial
    formula_id: str

    def __post_init__(self):
        if self.poly.degree != family_vertex_count(self.spec):
            raise AssertionError(f"{self.spec}: degree {self.poly.degree} != vertex count")


_FORMULAS: dict[FamilyKind, tuple[str, Callable[[dict], IntPolynomial]]] = {
    FamilyKind.PATH: ("path-recurrence", lambda p: path_poly(p["n"]).poly),
    FamilyKind.CYCLE: ("cycle-recurrence", lambda p: cycle_poly(p["n"]).poly),
    FamilyKind.STAR: ("star", lambda p: star(p["n"])),
    FamilyKind.COMPLETE_BIPARTITE_BALANCED: ("knn", lambda p: balanced_complete_bipartite(p["n"])),
    FamilyKind.DUTCH_WINDMILL: ("windmill", lambda p: dutch_windmill(p["n"])),
    FamilyKind.PENDANT_DUTCH_WINDMILL: ("pendant-windmill", lambda p: pendant_windmill(p["n"])),
    FamilyKind.FAN: ("fan", lambda p: fan(p["m"], p["n"])),
    FamilyKind.GEM: ("gem", lambda p: gem(p["n"])),
    FamilyKind.GEM_PLUS_EDGE: ("gem-plus-edge", lambda p: gem_plus_edge(p["n"])),
    FamilyKind.TRIANGLE_ON_CYCLE: ("triangle-on-cycle", lambda p: triangle_on_cycle(p["n"])),
    FamilyKind.WHEEL: ("wheel", lambda p: wheel(p["n"])),
    FamilyKind.CLIQUE_COMPOSITION: ("windmill-clique", lambda p: windmill_clique(p["n"], p["t"])),
}


def closed_form(spec: FamilySpec) -> ClosedFormResult:
    formula_id, fn = _FORMULAS[spec.kind]
    return ClosedFormResult(spec, fn(dict(spec.params)), formula_id)


# -- coefficient-triangle export --------------------------------------------

def coefficient_rows(specs: Iterable[FamilySpec]) -> list[tuple[FamilySpec, IntPolynomial]]:
    return [(s, closed_form(s).poly) for s in specs]


def triangle_csv(rows: list[tuple[FamilySpec, IntPolynomial]], free: str = "n") -> str:
    """One CSV row per parameter value: ``param,c0,c1,...`` as decimal strings."""
    width = max(p.degree for _, p in rows) + 1
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([free] + [f"c{i}" for i in range(width)])
    for spec, p in rows:
        writer.writerow([spec[free]] + [str(p[i]) for i in range(width)])
    return buf.getvalue()


def triangle_bfile(rows: list[tuple[FamilySpec, IntPolynomial]], offset: int = 1) -> str:
    """OEIS b-file style: ``index value`` lines, rows read low degree first."""
    lines = []
    k = offset
    for _, p in rows:
        for c in p.coeffs:
            lines.append(f"{k} {c}")
            k += 1
    return "\n".join(lines) + "\n"
