"""Recover ``D(G, x)`` from evaluations at a single point ``lam``.

Evaluating ``D(G o K_t)`` at ``lam`` gives ``D(G)`` at ``(1 + lam)**t - 1``.
For ``t = 1..n+1`` these nodes are pairwise distinct unless
``lam`` is -2, -1 or 0, so ``n + 1`` such evaluations determine the degree-``n``
polynomial by interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .engine import brute_force
from .errors import InterpolationError
from .families import compose_with_clique_poly
from .graph import Graph, compose_clique
from .poly import IntPolynomial, Rational, eval_rational, lagrange_interpolate

CONSTRUCTIVE_BUDGET = 20
EXCLUDED = (Fraction(-2), Fraction(-1), Fraction(0))


@dataclass
class InterpDemoResult:
    graph: str
    lam: Fraction
    nodes: list[Fraction]
    oracle_values: list[Fraction]
    constructive_values: list[Fraction | None]
    reconstructed: IntPolynomial
    direct: IntPolynomial

    @property
    def match(self) -> bool:
        return self.reconstructed == self.direct

    @property
    def constructive_match(self) -> bool | None:
        pairs = [(a, b) for a, b in zip(self.oracle_values, self.constructive_values) if b is not None]
        return all(a == b for a, b in pairs) if pairs else None

    def to_dict(self) -> dict:
        return {
            "graph": self.graph,
            "lambda": str(self.lam),
            "nodes": [str(v) for v in self.nodes],
            "oracle_values": [str(v) for v in self.oracle_values],
            "constructive_values": [None if v is None else str(v) for v in self.constructive_values],
            "reconstructed": self.reconstructed.to_strings(),
            "direct": self.direct.to_strings(),
            "match": self.match,
            "constructive_match": self.constructive_match,
        }


def interpolation_nodes(lam: Rational, n: int) -> list[Fraction]:
    """``(1 + lam)**t - 1`` for ``t = 1..n+1``; rejects values that make nodes collide."""
    lam = Fraction(lam)
    nodes = [(1 + lam) ** t - 1 for t in range(1, n + 2)]
    if lam in EXCLUDED:
        raise InterpolationError(
            f"lambda={lam} is excluded: the nodes (1+lambda)^t - 1 collide "
            f"({', '.join(str(v) for v in nodes[:4])}, ...), so they cannot determine D(G, x)"
        )
    return nodes


def reconstruct(n: int, lam: Rational, oracle: Callable[[int], Fraction]) -> IntPolynomial:
    """Interpolate a degree-``n`` polynomial from ``oracle(t) = D(G o K_t, lam)``, ``t = 1..n+1``."""
    nodes = interpolation_nodes(lam, n)
    return lagrange_interpolate([(x, oracle(t)) for t, x in enumerate(nodes, start=1)])


def interpolation_demo(
    g: Graph,
    lam: Rational,
    name: str | None = None,
    constructive_budget: int = CONSTRUCTIVE_BUDGET,
) -> InterpDemoResult:
    """Run the reduction end to end and check it against direct enumeration.

    Oracle values come from the composition identity applied to ``D(G)``;
    whenever ``G o K_t`` has at most ``constructive_budget`` vertices they are
    also computed by enumerating the constructed graph.  Any disagreement
    raises ``AssertionError``.
    """
    lam = Fraction(lam)
    n = g.vertex_count
    nodes = interpolation_nodes(lam, n)
    direct = brute_force(g).poly
    oracle = [eval_rational(compose_with_clique_poly(direct, t), lam) for t in range(1, n + 2)]
    constructive: list[Fraction | None] = []
    for t in range(1, n + 2):
        if n * t <= constructive_budget:
            constructive.append(eval_rational(brute_force(compose_clique(g, t)).poly, lam))
        else:
            constructive.append(None)
    rebuilt = lagrange_interpolate(list(zip(nodes, oracle)))
    result = InterpDemoResult(name or repr(g), lam, nodes, oracle, constructive, rebuilt, direct)
    if not result.match:
        raise AssertionError(f"reconstruction {rebuilt} differs from direct {direct}")
    if result.constructive_match is False:
        raise AssertionError("composition oracle disagrees with enumeration of G o K_t")
    return result
