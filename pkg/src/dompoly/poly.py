"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Rational scalars are :class:`fractions.Fraction`; complex scalars are the
builtin :class:`complex`.
"""

from __future__ import annotations

import json
import math
import sys
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import EvaluationOverflowError, InterpolationError

Rational = Union[int, Fraction]

_EPS = sys.float_info.epsilon / 2  # unit roundoff


class IntPolynomial:
    """Polynomial ``sum(c[i] * x**i)`` with Python ``int`` coefficients.

    Trailing zero coefficients are stripped, so the zero polynomial has an
    empty coefficient tuple and ``degree == -1``.

    >>> x = IntPolynomial.x()
    >>> (x * (x + 2)).coeffs
    (0, 2, 1)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @classmethod
    def one_plus_x_pow(cls, k: int) -> IntPolynomial:
        """``(1 + x)**k`` from the binomial row."""
        return cls(math.comb(k, i) for i in range(k + 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            body = "" if (mag == 1 and i > 0) else str(mag)
            if i == 1:
                body += "x"
            elif i > 1:
                body += f"x^{i}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> IntPolynomial:
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = IntPolynomial.constant(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``x**k``."""
        return IntPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def compose(self, s: IntPolynomial) -> IntPolynomial:
        """``self(s(x))`` by Horner's scheme."""
        result = IntPolynomial()
        for c in reversed(self.coeffs):
            result = result * s + c
        return result

    def __call__(self, v):
        if isinstance(v, IntPolynomial):
            return self.compose(v)
        if isinstance(v, complex):
            return eval_complex(self, v)[0]
        return eval_rational(self, v)

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    # -- serialization -----------------------------------------------------

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs] if self.coeffs else ["0"]

    def to_json(self) -> str:
        return json.dumps(self.to_strings())

    @classmethod
    def from_json(cls, text: str) -> IntPolynomial:
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
            raise ValueError("expected a JSON array of decimal strings")
        return cls(int(s) for s in data)


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def subtract(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p - q


def multiply(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def power(p: IntPolynomial, k: int) -> IntPolynomial:
    return p ** k


def substitute(p: IntPolynomial, s: IntPolynomial) -> IntPolynomial:
    return p.compose(s)


def derivative(p: IntPolynomial) -> IntPolynomial:
    return p.derivative()


def eval_rational(p: IntPolynomial | Sequence[Rational], v: Rational) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    v = Fraction(v)
    acc = Fraction(0)
    for c in reversed(tuple(p)):
        acc = acc * v + c
    return acc


def eval_complex(p: IntPolynomial, z: complex) -> tuple[complex, float]:
    """Floating Horner evaluation.

    Returns ``(value, bound)`` where ``bound`` is a running error bound on
    ``|computed - exact|`` (Higham's ``gamma_{2n}`` style estimate plus the
    coefficient conversion error).
    """
    z = complex(z)
    try:
        coeffs = [float(c) for c in p.coeffs]
    except OverflowError:
        raise EvaluationOverflowError(
            "coefficients exceed double range; use eval_rational for an exact value"
        ) from None
    if not coeffs:
        return 0j, 0.0
    acc = complex(coeffs[-1])
    absz = abs(z)
    mag = abs(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
        mag = mag * absz + abs(c)
    if not (math.isfinite(acc.real) and math.isfinite(acc.imag)):
        raise EvaluationOverflowError(
            "floating evaluation overflowed; use eval_rational for an exact value"
        )
    n = len(coeffs)
    gamma = (4 * n + 2) * _EPS / (1 - (4 * n + 2) * _EPS)
    return acc, gamma * mag


def lagrange_interpolate(points: Sequence[tuple[Rational, Rational]]) -> IntPolynomial:
    """Exact interpolation through ``points``; the result must have integer coefficients.

    Uses Newton divided differences over :class:`~fractions.Fraction`.
    Raises :class:`InterpolationError` on repeated abscissae or when the
    interpolant is not integral.
    """
    if not points:
        raise InterpolationError("no interpolation points")
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        dup = sorted({x for x in xs if xs.count(x) > 1})
        raise InterpolationError(f"interpolation nodes are not pairwise distinct: {dup}")
    n = len(xs)
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand Newton form into monomial coefficients
    result = [Fraction(0)] * n
    result[0] = coef[-1]
    deg = 0
    for k in range(n - 2, -1, -1):
        # result = result * (x - xs[k]) + coef[k]
        nxt = [Fraction(0)] * n
        for i in range(deg + 1):
            nxt[i + 1] += result[i]
            nxt[i] -= result[i] * xs[k]
        nxt[0] += coef[k]
        result = nxt
        deg += 1
    bad = [i for i, c in enumerate(result) if c.denominator != 1]
    if bad:
        raise InterpolationError(
            f"interpolant has non-integer coefficients at degrees {bad}; inputs are inconsistent"
        )
    return IntPolynomial(int(c) for c in result)
