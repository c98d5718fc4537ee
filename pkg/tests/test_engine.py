from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, naive_domination
from dompoly.engine import (
    Method,
    brute_force,
    count_covering_subsets,
    cycle_poly,
    default_pivot,
    disjoint_union_poly,
    domination_number,
    odot_recurrence,
    p_v,
    path_poly,
    validate_path_cycle_recurrences,
    vertex_recurrence,
)
from dompoly.errors import BudgetExceededError
from dompoly.graph import (
    Graph,
    complete_graph,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    empty_graph,
    matching,
    odot,
    path_graph,
    star_graph,
    wheel_graph,
)
from dompoly.poly import IntPolynomial

P = IntPolynomial
X = IntPolynomial.x()


def test_brute_force_examples():
    assert brute_force(complete_graph(3)).poly == P([0, 3, 3, 1])
    assert brute_force(path_graph(3)).poly == P([0, 1, 3, 1])
    assert brute_force(star_graph(3)).poly == P([0, 1, 3, 4, 1])
    assert brute_force(Graph(0)).poly == 1
    assert brute_force(path_graph(3)).method is Method.BRUTE_FORCE


@given(graphs(max_n=9))
def test_brute_force_matches_set_oracle(g):
    assert brute_force(g).poly == naive_domination(g)


@given(graphs(min_n=1, max_n=9))
def test_coefficient_sanity(g):
    d = brute_force(g).poly
    n = g.vertex_count
    assert d[0] == 0
    assert d.degree == n and d[n] == 1
    gamma = domination_number(d)
    assert all(c == 0 for c in d.coeffs[:gamma])
    assert all(c > 0 for c in d.coeffs[gamma:])
    # V - {v} dominates exactly when v has a neighbor
    if n > 1:
        assert d[n - 1] == sum(1 for v in range(n) if g.degree(v) > 0)


def test_budget_is_enforced():
    with pytest.raises(BudgetExceededError):
        brute_force(empty_graph(12), budget=11)
    with pytest.raises(BudgetExceededError):
        count_covering_subsets([1] * 27, 1)


def test_large_enumeration_splits_blocks():
    # 20 vertices forces the high/low split; C_20 against its recurrence
    assert brute_force(cycle_graph(20)).poly == cycle_poly(20).poly


def test_p_v_examples():
    assert p_v(path_graph(3), 1).is_zero()
    for n in range(2, 6):
        assert p_v(complete_graph(n), 0).is_zero()
    # K_1: N(v) is empty, so the empty set qualifies and the recurrence still gives x
    assert p_v(Graph(1), 0) == 1
    assert vertex_recurrence(Graph(1), 0).poly == X
    assert p_v(path_graph(4), 0) == P([0, 1, 1])


@given(graphs(min_n=1, max_n=8), st.data())
def test_p_v_matches_definition(g, data):
    v = data.draw(st.integers(0, g.vertex_count - 1))
    closed_v = {v} | set(g.neighbors(v))
    rest = [u for u in range(g.vertex_count) if u not in closed_v]
    counts = [0] * (len(rest) + 1)
    for k in range(len(rest) + 1):
        for s in combinations(rest, k):
            cov = set(s).union(*(g.neighbors(u) for u in s))
            if set(rest) <= cov and g.neighbors(v) <= cov:
                counts[k] += 1
    assert p_v(g, v) == P(counts)


def test_vertex_recurrence_examples():
    assert vertex_recurrence(path_graph(3), 1).poly == P([0, 1, 3, 1])
    assert vertex_recurrence(complete_graph(2), 0).poly == P([0, 2, 1])
    for v in range(3):
        assert vertex_recurrence(complete_graph(3), v).poly == P([0, 3, 3, 1])


def test_odot_recurrence_examples():
    for n in range(4, 10):
        w = wheel_graph(n)
        assert odot(w, 0) == star_graph(n - 1)
        expected = cycle_poly(n - 1).poly + X * (X + 1) ** (n - 1)
        assert odot_recurrence(w, 0).poly == expected == naive_domination(w)
    for u in range(3):
        assert odot_recurrence(complete_graph(3), u).poly == P([0, 3, 3, 1])
    p3 = path_graph(3)
    assert odot(p3, 1) == p3
    assert odot_recurrence(p3, 1).poly == P([0, 1, 3, 1])


@given(graphs(min_n=1, max_n=8), st.data())
def test_recurrences_match_oracle_every_pivot(g, data):
    d = naive_domination(g)
    v = data.draw(st.integers(0, g.vertex_count - 1))
    assert vertex_recurrence(g, v).poly == d
    assert odot_recurrence(g, v).poly == d


def test_vertex_recurrence_recurses_above_cutoff():
    g = wheel_graph(14)
    assert vertex_recurrence(g, cutoff=5).poly == brute_force(g).poly


def test_odot_recurrence_with_custom_solver():
    g = cycle_graph(7)
    solver = lambda h: vertex_recurrence(h).poly if h.vertex_count else P([1])  # noqa: E731
    assert odot_recurrence(g, 0, solver=solver).poly == cycle_poly(7).poly


def test_default_pivot():
    assert default_pivot(star_graph(4)) == 0
    assert default_pivot(path_graph(4)) == 1
    with pytest.raises(ValueError):
        default_pivot(Graph(0))


def test_disjoint_union_examples():
    k1 = brute_force(Graph(1))
    assert disjoint_union_poly(k1, k1).poly == X * X == brute_force(empty_graph(2)).poly
    k2 = brute_force(complete_graph(2))
    for n in range(1, 5):
        acc = k2
        for _ in range(n - 1):
            acc = acc * k2
        assert acc.poly == (X * X + 2 * X) ** n == brute_force(matching(n)).poly
    p1 = brute_force(path_graph(1))
    acc = p1
    for _ in range(6):
        acc = acc * p1
    assert acc.poly == X**7


@given(graphs(max_n=5), graphs(max_n=5))
def test_union_is_multiplicative(g, h):
    assert brute_force(disjoint_union(g, h)).poly == brute_force(g).poly * brute_force(h).poly


def test_path_cycle_examples():
    assert path_poly(1).poly == X
    assert path_poly(3).poly == P([0, 1, 3, 1])
    assert path_poly(6).poly == naive_domination(path_graph(6))
    assert cycle_poly(3).poly == P([0, 3, 3, 1])
    assert cycle_poly(4).poly == P([0, 0, 6, 4, 1])
    assert cycle_poly(9).poly == naive_domination(cycle_graph(9))
    with pytest.raises(ValueError):
        path_poly(0)
    with pytest.raises(ValueError):
        cycle_poly(2)


def test_path_cycle_gate():
    validate_path_cycle_recurrences()
    for n in range(1, 19):
        assert path_poly(n).poly == brute_force(path_graph(n)).poly
    for n in range(3, 19):
        assert cycle_poly(n).poly == brute_force(cycle_graph(n)).poly


def test_deleting_isolated_vertex_divides_by_x():
    g = disjoint_union(cycle_graph(5), Graph(1))
    assert brute_force(g).poly == X * brute_force(delete_vertex(g, 5)).poly
