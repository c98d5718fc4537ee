import pytest
from hypothesis import given

from conftest import graphs, naive_domination
from dompoly import families as fam
from dompoly.engine import brute_force, path_poly
from dompoly.graph import (
    FamilyKind,
    FamilySpec,
    Graph,
    build_family,
    complete_bipartite,
    compose_clique,
    cycle_graph,
    dutch_windmill,
    fan_graph,
    gem_graph,
    gem_plus_edge,
    join,
    matching,
    pendant_dutch_windmill,
    star_graph,
    triangle_on_cycle,
    wheel_graph,
)
from dompoly.poly import IntPolynomial
from dompoly.verify import family_specs

P = IntPolynomial
X = IntPolynomial.x()


def test_star_examples():
    assert fam.star(1) == P([0, 2, 1])
    assert fam.star(3) == P([0, 1, 3, 4, 1]) == naive_domination(star_graph(3))
    assert fam.star(5) == brute_force(star_graph(5)).poly


def test_join_formula_examples():
    assert fam.join_formula(X, 1, X, 1) == P([0, 2, 1])
    for n in range(1, 6):
        assert fam.join_formula(X, 1, P([0, 2, 1]) ** n, 2 * n) == fam.dutch_windmill(n)
    with pytest.raises(ValueError):
        fam.join_formula(X, 2, X, 1)
    with pytest.raises(ValueError):
        fam.join_formula(P([1]), 0, X, 1)


@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
def test_join_formula_matches_enumeration(g1, g2):
    d1, d2 = brute_force(g1).poly, brute_force(g2).poly
    expected = brute_force(join(g1, g2)).poly
    assert fam.join_formula(d1, g1.vertex_count, d2, g2.vertex_count) == expected


def test_knn_examples():
    assert fam.balanced_complete_bipartite(1) == P([0, 2, 1])
    assert fam.balanced_complete_bipartite(2) == P([0, 0, 6, 4, 1]) == naive_domination(cycle_graph(4))
    assert fam.balanced_complete_bipartite(4) == brute_force(complete_bipartite(4, 4)).poly


def test_windmill_examples():
    assert fam.dutch_windmill(1) == P([0, 3, 3, 1])
    assert fam.dutch_windmill(2) == P([0, 1, 8, 10, 5, 1]) == naive_domination(dutch_windmill(2))
    assert fam.dutch_windmill(4) == brute_force(dutch_windmill(4)).poly


def test_compose_with_clique_examples():
    d = fam.dutch_windmill(3)
    assert fam.compose_with_clique_poly(d, 1) == d
    assert fam.compose_with_clique_poly(X, 3) == P([0, 3, 3, 1])
    for n in range(1, 5):
        for t in range(1, 5):
            assert fam.compose_with_clique_poly(fam.dutch_windmill(n), t) == fam.windmill_clique(n, t)
    assert fam.windmill_clique(2, 2) == brute_force(compose_clique(dutch_windmill(2), 2)).poly
    with pytest.raises(ValueError):
        fam.compose_with_clique_poly(X, 0)


def test_pendant_windmill_examples():
    assert fam.pendant_windmill(1) == P([0, 1, 5, 4, 1]) == naive_domination(pendant_dutch_windmill(1))
    assert fam.pendant_windmill(3) == brute_force(pendant_dutch_windmill(3)).poly
    for n in range(1, 21):
        assert fam.pendant_windmill(n).degree == 2 * n + 2


def test_fan_small_instance():
    truth = naive_domination(fan_graph(2, 3))
    assert truth == P([0, 1, 10, 10, 5, 1])
    assert fam.fan(2, 3) == truth


def test_fan_m2_shortcut_expression_is_not_the_fan_polynomial():
    # 2x((1+x)^n - 1) + D(P_n) is not D(F_{2,n}); it even has the wrong degree
    for n in range(1, 9):
        shortcut = 2 * X * ((X + 1) ** n - 1) + path_poly(n).poly
        assert shortcut != brute_force(fan_graph(2, n)).poly
        assert shortcut.degree == n + 1 != fan_graph(2, n).vertex_count
    assert 2 * X * ((X + 1) ** 3 - 1) + path_poly(3).poly == P([0, 1, 9, 7, 2])


def test_fan_m2_specialization_agrees_with_general_formula():
    for n in range(1, 13):
        specialized = (X * X + 2 * X) * ((X + 1) ** n - 1) + X * X + path_poly(n).poly
        assert fam.fan(2, n) == specialized == brute_force(fan_graph(2, n)).poly


def test_fan_m1_and_general():
    for n in range(1, 9):
        assert fam.fan(1, n) == brute_force(fan_graph(1, n)).poly
    for m in range(1, 6):
        for n in range(1, 8):
            assert fam.fan(m, n) == brute_force(fan_graph(m, n)).poly


def test_gem_examples():
    assert fam.gem(2) == P([0, 2, 6, 4, 1]) == naive_domination(gem_graph(2))
    for n in range(1, 9):
        d = fam.gem(n)
        g = gem_graph(n)
        assert d == brute_force(g).poly
        universal = sum(1 for v in range(g.vertex_count) if g.degree(v) == g.vertex_count - 1)
        assert d[1] == universal


def test_gem_plus_edge_examples():
    assert fam.gem_plus_edge(1) == naive_domination(gem_plus_edge(1))
    for n in range(1, 9):
        d = fam.gem_plus_edge(n)
        assert d[0] == 0
        assert d == brute_force(gem_plus_edge(n)).poly


def test_triangle_on_cycle_examples():
    k4_minus_edge = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert fam.triangle_on_cycle(3) == P([0, 2, 6, 4, 1]) == naive_domination(k4_minus_edge)
    for n in range(3, 11):
        d = fam.triangle_on_cycle(n)
        assert d == brute_force(triangle_on_cycle(n)).poly
        assert all(c >= 0 for c in d.coeffs)


def test_wheel_examples():
    assert fam.wheel(4) == (X + 1) ** 4 - 1
    for n in range(4, 12):
        d = fam.wheel(n)
        assert d == brute_force(wheel_graph(n)).poly
        assert d[1] >= 1
    with pytest.raises(ValueError):
        fam.wheel(3)


def test_every_closed_form_matches_enumeration():
    specs = family_specs(16)
    assert {s.kind for s in specs} == set(FamilyKind)
    for spec in specs:
        assert fam.closed_form(spec).poly == brute_force(build_family(spec)).poly, spec.label


def test_closed_form_degree_invariant():
    for spec in family_specs(30):
        r = fam.closed_form(spec)
        assert r.poly.degree == build_family(spec).vertex_count


def test_windmill_is_join_with_matching():
    for n in range(1, 6):
        assert join(Graph(1), matching(n)) == dutch_windmill(n)


def test_oeis_metadata():
    assert fam.OEIS_IDS[FamilyKind.PENDANT_DUTCH_WINDMILL] == "A213658"
    assert fam.OEIS_IDS[FamilyKind.FAN] == "A213657"
    assert fam.OEIS_IDS[FamilyKind.GEM] == "A213662"
    assert fam.OEIS_IDS[FamilyKind.TRIANGLE_ON_CYCLE] == "A213664"


def test_triangle_exports():
    specs = [FamilySpec(FamilyKind.PENDANT_DUTCH_WINDMILL, {"n": n}) for n in (1, 2)]
    rows = fam.coefficient_rows(specs)
    csv_text = fam.triangle_csv(rows)
    lines = csv_text.splitlines()
    assert lines[0] == "n,c0,c1,c2,c3,c4,c5,c6"
    assert lines[1] == "1,0,1,5,4,1,0,0"
    assert lines[2].split(",")[:2] == ["2", "0"]
    bfile = fam.triangle_bfile(rows).splitlines()
    assert bfile[:5] == ["1 0", "2 1", "3 5", "4 4", "5 1"]
    assert len(bfile) == 5 + 7
