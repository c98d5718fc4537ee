"""Shared fixtures and an independent set-based domination oracle.

The oracle walks ``itertools.combinations`` with Python sets and shares no
code with the bitmask engine, so agreement between the two is meaningful.
"""

from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dompoly.graph import Graph
from dompoly.poly import IntPolynomial

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def naive_domination(g: Graph) -> IntPolynomial:
    n = g.vertex_count
    closed = [{v} | set(g.neighbors(v)) for v in range(n)]
    counts = [0] * (n + 1)
    for k in range(n + 1):
        for s in combinations(range(n), k):
            covered = set()
            for v in s:
                covered |= closed[v]
            if len(covered) == n:
                counts[k] += 1
    return IntPolynomial(counts)


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def int_polys(draw, max_degree: int = 6, bound: int = 50):
    return IntPolynomial(draw(st.lists(st.integers(-bound, bound), max_size=max_degree + 1)))


@pytest.fixture
def oracle():
    return naive_domination


def isomorphic(g: Graph, h: Graph) -> bool:
    """Permutation search; fine for the handful of vertices used in tests."""
    from itertools import permutations

    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if sorted(map(g.degree, range(g.vertex_count))) != sorted(map(h.degree, range(h.vertex_count))):
        return False
    target = h.edges
    for perm in permutations(range(g.vertex_count)):
        if all((min(perm[u], perm[v]), max(perm[u], perm[v])) in target for u, v in g.edges):
            return True
    return False


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def report_criterion(number: int, title: str, passed: bool, detail: str = "") -> None:
    line = f"[criterion {number:>2}] {'PASS' if passed else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
