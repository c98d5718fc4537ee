import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import int_polys
from dompoly.errors import EvaluationOverflowError, InterpolationError
from dompoly.poly import (
    IntPolynomial,
    add,
    derivative,
    eval_complex,
    eval_rational,
    lagrange_interpolate,
    multiply,
    power,
    substitute,
    subtract,
)

X = IntPolynomial.x()
P = IntPolynomial


def test_normalization():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).is_zero() and P().degree == -1
    assert P([0]) == 0 and P([5]) == 5
    assert P([3, 0, 1]).leading() == 1


def test_arithmetic_examples():
    assert multiply(X, X + 2) == P([0, 2, 1])
    assert add(P([0, 2, 1]), P()) == P([0, 2, 1])
    assert power(P([0, 2, 1]), 2) == P([0, 0, 4, 4, 1])
    assert subtract(X, X).is_zero()


def test_power_examples():
    assert power(X + 1, 2) == P([1, 2, 1])
    assert power(P([0, 2, 1]), 1) == P([0, 2, 1])
    assert power(X + 1, 4) == P([1, 4, 6, 4, 1])
    assert power(P([3, 7]), 0) == 1
    assert IntPolynomial.one_plus_x_pow(9) == power(X + 1, 9)


def test_substitute_examples():
    for t in range(1, 6):
        s = power(X + 1, t) - 1
        assert substitute(X, s) == s
    assert substitute(X * X, X + 1) == P([1, 2, 1])
    # D(K_2) composed with (1+x)^2 - 1 gives D(K_4); K_4 counts every nonempty subset
    k4 = P([math.comb(4, i) for i in range(5)]) - 1
    assert substitute(P([0, 2, 1]), power(X + 1, 2) - 1) == k4


def test_eval_rational_examples():
    assert eval_rational(P([0, 2, 1]), 1) == 3
    assert eval_rational(P([7, 1, 1]), 0) == 7
    assert eval_rational(P([0, 3, 3, 1]), -1) == -1
    assert eval_rational(P([0, 2, 1]), Fraction(1, 2)) == Fraction(5, 4)


def test_eval_complex_examples():
    v, err = eval_complex(P([0, 2, 1]), 1j)
    assert v == -1 + 2j and err >= 0
    assert eval_complex(P([5, 1, 1]), 0)[0] == 5
    assert eval_complex(P([0, 3, 3, 1]), -1)[0] == -1


def test_eval_complex_overflow():
    with pytest.raises(EvaluationOverflowError):
        eval_complex(P([10**400, 1]), 1)
    with pytest.raises(EvaluationOverflowError):
        eval_complex(power(X, 400) + 1, 1e3)


def test_derivative_examples():
    assert derivative(P([0, 2, 1])) == P([2, 2])
    assert derivative(P([9])).is_zero()
    assert derivative(power(X + 1, 4)) == 4 * power(X + 1, 3)


def test_interpolate_examples():
    assert lagrange_interpolate([(0, 0), (1, 3), (-1, -1)]) == P([0, 2, 1])
    assert lagrange_interpolate([(0, 7)]) == 7
    d_p4 = P([0, 0, 4, 4, 1])
    pts = [(2**t - 1, eval_rational(d_p4, 2**t - 1)) for t in range(1, 6)]
    assert lagrange_interpolate(pts) == d_p4


def test_interpolate_errors():
    with pytest.raises(InterpolationError, match="distinct"):
        lagrange_interpolate([(1, 1), (1, 2)])
    with pytest.raises(InterpolationError, match="non-integer"):
        lagrange_interpolate([(0, 0), (2, 1)])
    with pytest.raises(InterpolationError):
        lagrange_interpolate([])


def test_str_and_json():
    p = P([0, -1, 0, 3])
    assert str(p) == "3x^3 - x"
    assert str(P()) == "0"
    big = P([10**30, -(10**25), 1])
    assert IntPolynomial.from_json(big.to_json()) == big
    assert big.to_strings()[0] == str(10**30)


# -- ring axioms and homomorphisms -------------------------------------------

@given(int_polys(), int_polys(), int_polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == 0
    assert p * 1 == p


@given(int_polys(), int_polys())
def test_degree_of_product(p, q):
    if p.is_zero() or q.is_zero():
        assert (p * q).is_zero()
    else:
        assert (p * q).degree == p.degree + q.degree


@given(int_polys(max_degree=4), int_polys(max_degree=3), st.fractions(-5, 5, max_denominator=9))
def test_substitute_is_evaluation_homomorphism(p, s, v):
    assert eval_rational(substitute(p, s), v) == eval_rational(p, eval_rational(s, v))


@given(int_polys(), int_polys(), st.integers(-20, 20))
def test_evaluation_is_ring_homomorphism(p, q, v):
    assert eval_rational(p * q, v) == eval_rational(p, v) * eval_rational(q, v)
    assert eval_rational(p + q, v) == eval_rational(p, v) + eval_rational(q, v)


@given(int_polys(), int_polys())
def test_derivative_product_rule(p, q):
    assert derivative(p * q) == derivative(p) * q + p * derivative(q)


@given(int_polys(max_degree=3), st.integers(0, 5))
def test_power_matches_repeated_product(p, k):
    expected = P([1])
    for _ in range(k):
        expected = expected * p
    assert power(p, k) == expected


@given(int_polys(max_degree=8, bound=10**12))
def test_interpolation_left_inverse(p):
    nodes = [Fraction(3 * i - 7, 1 + i % 3) for i in range(max(p.degree, 0) + 1)]
    assert lagrange_interpolate([(t, eval_rational(p, t)) for t in nodes]) == p


@given(int_polys(max_degree=10, bound=10**6), st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False))
def test_eval_complex_within_bound(p, z):
    value, bound = eval_complex(p, z)
    exact_re = Fraction(0)
    exact_im = Fraction(0)
    zr, zi = Fraction(z.real), Fraction(z.imag)
    for c in reversed(p.coeffs):
        exact_re, exact_im = exact_re * zr - exact_im * zi + c, exact_re * zi + exact_im * zr
    err = abs(complex(value.real - float(exact_re), value.imag - float(exact_im)))
    assert err <= bound * (1 + 1e-12) + 1e-300
