"""Exact domination polynomials: subset enumeration and structural recurrences."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import BudgetExceededError
from .graph import (
    Graph,
    contract_vertex,
    cycle_graph,
    delete_closed_neighborhood,
    delete_vertex,
    odot,
    path_graph,
)
from .poly import IntPolynomial

MAX_ENUMERATION_VERTICES = 26
RECURSION_CUTOFF = 12
_LOW_BITS = 16


class Method(enum.Enum):
    BRUTE_FORCE = "brute"
    VERTEX_RECURRENCE = "vertex-rec"
    ODOT_RECURRENCE = "odot-rec"
    CLOSED_FORM = "closed-form"
    PATH_CYCLE_RECURRENCE = "path-cycle-rec"


@dataclass(frozen=True)
class DominationPolynomial:
    graph_id: str
    poly: IntPolynomial
    method: Method

    def __mul__(self, other: DominationPolynomial) -> DominationPolynomial:
        return disjoint_union_poly(self, other)


def _cover_table(masks: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """Union of ``masks`` and popcount for every subset of ``range(len(masks))``."""
    k = len(masks)
    cover = np.zeros(1 << k, dtype=np.uint32)
    size = np.zeros(1 << k, dtype=np.int64)
    for i, m in enumerate(masks):
        lo, hi = 1 << i, 2 << i
        np.bitwise_or(cover[:lo], np.uint32(m), out=cover[lo:hi])
        np.add(size[:lo], 1, out=size[lo:hi])
    return cover, size


def count_covering_subsets(
    masks: Sequence[int], target: int, budget: int = MAX_ENUMERATION_VERTICES
) -> list[int]:
    """``counts[i]`` = number of ``i``-subsets of ``masks`` whose union contains ``target``.

    Subsets are split into a low block (tabulated once with numpy) and a high
    block enumerated prefix by prefix, so memory stays at ``2**16`` entries.
    """
    k = len(masks)
    if k > budget:
        raise BudgetExceededError(
            f"subset enumeration over {k} vertices exceeds budget of {budget}"
        )
    low = min(k, _LOW_BITS)
    low_cover, low_size = _cover_table(masks[:low])
    high_cover, high_size = _cover_table(masks[low:])
    target32 = np.uint32(target)
    counts = np.zeros(k + 1, dtype=np.int64)
    for prefix_cover, prefix_size in zip(high_cover.tolist(), high_size.tolist()):
        hit = (low_cover | np.uint32(prefix_cover)) & target32 == target32
        tally = np.bincount(low_size[hit], minlength=low + 1)
        counts[prefix_size : prefix_size + low + 1] += tally
    return [int(c) for c in counts]


def brute_force(g: Graph, budget: int = MAX_ENUMERATION_VERTICES) -> DominationPolynomial:
    """Count dominating sets of every size by enumerating all ``2**n`` subsets."""
    n = g.vertex_count
    if n == 0:
        return DominationPolynomial(repr(g), IntPolynomial.constant(1), Method.BRUTE_FORCE)
    counts = count_covering_subsets(g.closed_masks, (1 << n) - 1, budget)
    return DominationPolynomial(repr(g), IntPolynomial(counts), Method.BRUTE_FORCE)


def p_v(g: Graph, v: int, budget: int = MAX_ENUMERATION_VERTICES) -> IntPolynomial:
    """Generating polynomial of ``S ⊆ V - N[v]`` that dominate ``G - N[v]`` and cover ``N(v)``.

    Together those two conditions say ``N[S]`` contains every vertex but ``v``.
    """
    g._check(v)
    closed = g.closed_masks[v]
    rest = [u for u in range(g.vertex_count) if not closed >> u & 1]
    target = ((1 << g.vertex_count) - 1) & ~(1 << v)
    counts = count_covering_subsets([g.closed_masks[u] for u in rest], target, budget)
    return IntPolynomial(counts)


def default_pivot(g: Graph) -> int:
    """Lowest-index vertex of maximum degree."""
    if g.vertex_count == 0:
        raise ValueError("empty graph has no pivot")
    degrees = [len(a) for a in g.adjacency]
    return degrees.index(max(degrees))


def _leaf(g: Graph, budget: int) -> IntPolynomial:
    return brute_force(g, budget).poly


def vertex_recurrence(
    g: Graph,
    v: int | None = None,
    cutoff: int = RECURSION_CUTOFF,
    budget: int = MAX_ENUMERATION_VERTICES,
) -> DominationPolynomial:
    """Split on ``v`` via contraction, deletion and closed-neighborhood deletion.

    ``D(G) = x D(G/v) + D(G-v) + x D(G-N[v]) - (1+x) p_v(G)``.  Sub-graphs with
    more than ``cutoff`` vertices recurse on their default pivot; smaller ones
    are enumerated directly.
    """
    if v is None:
        v = default_pivot(g)
    g._check(v)
    x = IntPolynomial.x()

    def solve(h: Graph) -> IntPolynomial:
        if h.vertex_count <= cutoff:
            return _leaf(h, budget)
        return vertex_recurrence(h, None, cutoff, budget).poly

    poly = (
        x * solve(contract_vertex(g, v))
        + solve(delete_vertex(g, v))
        + x * solve(delete_closed_neighborhood(g, v))
        - (x + 1) * p_v(g, v, budget)
    )
    return DominationPolynomial(repr(g), poly, Method.VERTEX_RECURRENCE)


def odot_recurrence(
    g: Graph,
    u: int | None = None,
    solver: Callable[[Graph], IntPolynomial] | None = None,
) -> DominationPolynomial:
    """``D(G) = D(G-u) + D(G⊙u) - D(G⊙u - u)``.

    The three sub-polynomials come from ``solver`` (brute force by default).
    """
    if u is None:
        u = default_pivot(g)
    g._check(u)
    solve = solver or _leaf_default
    h = odot(g, u)
    poly = solve(delete_vertex(g, u)) + solve(h) - solve(delete_vertex(h, u))
    return DominationPolynomial(repr(g), poly, Method.ODOT_RECURRENCE)


def _leaf_default(g: Graph) -> IntPolynomial:
    return brute_force(g).poly


def disjoint_union_poly(p: DominationPolynomial, q: DominationPolynomial) -> DominationPolynomial:
    """Domination polynomial of a disjoint union is the product."""
    return DominationPolynomial(f"({p.graph_id}) + ({q.graph_id})", p.poly * q.poly, p.method)


# -- paths and cycles ----------------------------------------------------------

RECURRENCE_CHECK_LIMIT = 18


@lru_cache(maxsize=None)
def _path_table(n: int) -> tuple[IntPolynomial, ...]:
    table = [IntPolynomial.constant(1)] + [brute_force(path_graph(k)).poly for k in (1, 2, 3)]
    x = IntPolynomial.x()
    for k in range(4, n + 1):
        table.append(x * (table[k - 1] + table[k - 2] + table[k - 3]))
    return tuple(table)


@lru_cache(maxsize=None)
def _cycle_table(n: int) -> dict[int, IntPolynomial]:
    table = {k: brute_force(cycle_graph(k)).poly for k in (3, 4, 5)}
    x = IntPolynomial.x()
    for k in range(6, n + 1):
        table[k] = x * (table[k - 1] + table[k - 2] + table[k - 3])
    return table


@lru_cache(maxsize=1)
def validate_path_cycle_recurrences(limit: int = RECURRENCE_CHECK_LIMIT) -> None:
    """Check both cubic recurrences against enumeration for every order up to ``limit``.

    Raises ``AssertionError`` on the first mismatch.  Runs once per process,
    before either recurrence is trusted.
    """
    paths = _path_table(limit)
    cycles = _cycle_table(limit)
    for k in range(1, limit + 1):
        if paths[k] != brute_force(path_graph(k)).poly:
            raise AssertionError(f"path recurrence disagrees with enumeration at n={k}")
    for k in range(3, limit + 1):
        if cycles[k] != brute_force(cycle_graph(k)).poly:
            raise AssertionError(f"cycle recurrence disagrees with enumeration at n={k}")


def path_poly(n: int) -> DominationPolynomial:
    """``D(P_n)`` from ``D(P_n) = x (D(P_{n-1}) + D(P_{n-2}) + D(P_{n-3}))``."""
    if n < 1:
        raise ValueError("path order must be >= 1")
    validate_path_cycle_recurrences()
    return DominationPolynomial(f"P_{n}", _path_table(max(n, 3))[n], Method.PATH_CYCLE_RECURRENCE)


def cycle_poly(n: int) -> DominationPolynomial:
    """``D(C_n)`` from the same cubic recurrence seeded with C_3, C_4, C_5."""
    if n < 3:
        raise ValueError("cycle order must be >= 3")
    validate_path_cycle_recurrences()
    return DominationPolynomial(f"C_{n}", _cycle_table(max(n, 5))[n], Method.PATH_CYCLE_RECURRENCE)


def domination_number(p: IntPolynomial) -> int:
    """Index of the lowest nonzero coefficient."""
    return next(i for i, c in enumerate(p.coeffs) if c)
