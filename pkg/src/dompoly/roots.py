"""Roots of domination polynomials.

Two independent paths:

* exact real-root certification with Sturm sequences over the integers
  (:func:`sturm_real_root_count`, :func:`certify_no_nonzero_real_roots`,
  :func:`isolate_real_roots`), used for every claim about real roots;
* floating Aberth-Ehrlich iteration for the full complex root set
  (:func:`find_complex_roots`), used for right-half-plane checks and plots.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import gmpy2
import numpy as np

from .poly import IntPolynomial, Rational

RHP_GUARD = 1e-9
DEFAULT_TOL = 1e-13
MAX_ITER = 5000
POLISH_TARGET = 20
POLISH_START_DIGITS = 30
POLISH_MAX_DIGITS = 960
POLISH_SWEEPS = 200


# -- exact part --------------------------------------------------------------

def deflate_zero(p: IntPolynomial) -> tuple[int, IntPolynomial]:
    """Split ``p = x**k * q`` with ``q(0) != 0``; returns ``(k, q)``."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no well-defined roots")
    k = next(i for i, c in enumerate(p.coeffs) if c)
    return k, IntPolynomial(p.coeffs[k:])


def _primitive(c: list[int]) -> list[int]:
    g = math.gcd(*c)
    return [a // g for a in c] if g > 1 else c


def _strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Remainder of ``a`` by ``b`` up to a positive integer factor."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    scale, sign = abs(lb), (1 if lb > 0 else -1)
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        top = r[-1] * sign
        r = [scale * x for x in r]
        for i, bi in enumerate(b):
            r[k + i] -= top * bi
        _strip(r)
        if r:
            r = _primitive(r)
    return r


def _gcd(a: list[int], b: list[int]) -> list[int]:
    a, b = _primitive(list(a)), _primitive(list(b))
    while b:
        a, b = b, _prem(a, b)
        if b:
            b = _primitive(b)
    return a


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    """Quotient ``a / b`` over Q made primitive with positive leading term."""
    r = [Fraction(x) for x in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        q[k] = r[k + len(b) - 1] / b[-1]
        for i, bi in enumerate(b):
            r[k + i] -= q[k] * bi
    if any(r):
        raise ArithmeticError("division is not exact")
    den = math.lcm(*(f.denominator for f in q))
    out = [int(f * den) for f in q]
    if out[-1] < 0:
        out = [-x for x in out]
    return _primitive(out)


def squarefree_part(p: IntPolynomial) -> IntPolynomial:
    """``p / gcd(p, p')`` normalized to a primitive polynomial with positive leading coefficient."""
    c = list(p.coeffs)
    if len(c) <= 2:
        return IntPolynomial(_primitive(c) if c[-1] > 0 else [-x for x in _primitive(c)])
    g = _gcd(c, list(p.derivative().coeffs))
    return IntPolynomial(_exact_div(c, g))


def sturm_sequence(p: IntPolynomial) -> list[IntPolynomial]:
    """Sturm chain of the square-free part of ``p`` (each term up to a positive factor)."""
    f = list(squarefree_part(p).coeffs)
    seq = [f, _primitive(list(IntPolynomial(f).derivative().coeffs))]
    if not seq[1]:
        return [IntPolynomial(f)]
    while True:
        r = _prem(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])
    return [IntPolynomial(s) for s in seq]


def _sign_at(c: Sequence[int], v: Fraction) -> int:
    """Sign of ``p(v)``, computed as the integer ``den**deg * p(v)``."""
    num, den = v.numerator, v.denominator
    acc = 0
    dpow = 1
    for a in reversed(c):
        acc = acc * num + a * dpow
        dpow *= den
    return (acc > 0) - (acc < 0)


def _variations(seq: Sequence[IntPolynomial], v: Fraction) -> int:
    signs = [s for s in (_sign_at(p.coeffs, v) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count(seq: Sequence[IntPolynomial], a: Fraction, b: Fraction) -> int:
    return _variations(seq, a) - _variations(seq, b)


def sturm_real_root_count(p: IntPolynomial, a: Rational, b: Rational) -> int:
    """Exact number of distinct real roots of ``p`` in ``(a, b]``.

    Zero terms are skipped when counting sign variations.  For a square-free
    chain that makes the count at a root equal its right limit, so endpoints
    that happen to be roots need no perturbation.
    """
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("need a < b")
    if p.degree < 1:
        return 0
    return _count(sturm_sequence(p), a, b)


def cauchy_bound(p: IntPolynomial) -> Fraction:
    """``1 + max|a_i| / |a_n|``: every root has modulus below this."""
    lead = abs(p.leading())
    return 1 + Fraction(max(abs(c) for c in p.coeffs[:-1]), lead)


def nonzero_real_root_count(p: IntPolynomial) -> int:
    """Exact count of distinct nonzero real roots."""
    _, q = deflate_zero(p)
    if q.degree < 1:
        return 0
    seq = sturm_sequence(q)
    bound = cauchy_bound(q) + 1
    return _count(seq, -bound, Fraction(0)) + _count(seq, Fraction(0), bound)


def certify_no_nonzero_real_roots(p: IntPolynomial) -> bool:
    """True iff ``p`` has no real root other than 0, decided exactly."""
    return nonzero_real_root_count(p) == 0


def isolate_real_roots(
    p: IntPolynomial,
    a: Rational | None = None,
    b: Rational | None = None,
    width: Rational = Fraction(1, 10**9),
) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(lo, hi]``, each holding exactly one distinct real root of ``p``.

    Defaults to the whole Cauchy disc.  Intervals are refined by bisection
    until ``hi - lo < width`` and returned in increasing order.
    """
    if p.degree < 1:
        return []
    bound = cauchy_bound(p) + 1
    a = -bound if a is None else Fraction(a)
    b = bound if b is None else Fraction(b)
    width = Fraction(width)
    seq = sturm_sequence(p)
    out = []
    stack = [(a, b, _count(seq, a, b))]
    while stack:
        lo, hi, k = stack.pop()
        if k == 0:
            continue
        if k == 1 and hi - lo < width:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = _count(seq, lo, mid)
        stack.append((mid, hi, k - left))
        stack.append((lo, mid, left))
    out.sort()
    return out


# -- floating part -----------------------------------------------------------

def _float_coeffs(p: IntPolynomial) -> np.ndarray:
    """Coefficients as floats, scaled by a power of two if they exceed double range."""
    top = max(abs(c) for c in p.coeffs).bit_length()
    shift = max(0, top - 1000)
    return np.array([float(Fraction(c, 1 << shift)) for c in p.coeffs])


def _ratio_and_residual(c: np.ndarray, z: np.ndarray):
    """Return ``p'(z)/p(z)``, the scaled residual ``|p(z)| / max(1,|z|)^n`` and its rounding bound.

    Points outside the unit disc are evaluated through the reversed
    polynomial in ``w = 1/z`` so nothing overflows.
    """
    n = len(c) - 1
    inside = np.abs(z) <= 1
    w = np.where(inside, z, 1 / z)
    coeffs = np.where(inside[:, None], c[None, :], c[None, ::-1])
    pv = coeffs[:, -1].astype(complex)
    dv = np.zeros_like(pv)
    mag = np.abs(coeffs[:, -1])
    aw = np.abs(w)
    for k in range(n - 1, -1, -1):
        dv = dv * w + pv
        pv = pv * w + coeffs[:, k]
        mag = mag * aw + np.abs(coeffs[:, k])
    with np.errstate(divide="ignore", invalid="ignore"):
        q = dv / pv
        ratio = np.where(inside, q, w * (n - w * q))
    eps = np.finfo(float).eps
    bound = 2 * (2 * n + 1) * eps * mag
    return ratio, np.abs(pv), bound


@dataclass
class RootFinding:
    """Output of :func:`find_complex_roots`."""

    roots: np.ndarray
    residuals: np.ndarray  # |p(z)| / (||p||_1 max(1,|z|)^deg)
    corrections: np.ndarray  # last step per root; relative after polishing
    converged: bool
    iterations: int
    seed: int
    digits: int = 0  # working precision of the final polishing stage, 0 if skipped


def initial_guesses(p: IntPolynomial, seed: int = 0) -> np.ndarray:
    n = p.degree
    upper = float(cauchy_bound(p))
    lower = 1 / float(cauchy_bound(IntPolynomial(reversed(p.coeffs))))
    radius = math.sqrt(upper * lower)
    rng = np.random.default_rng(seed)
    angles = 2 * np.pi * (np.arange(n) + 0.25 + 0.5 * rng.random(n)) / n + 0.4
    return radius * np.exp(1j * angles)


def _polish(coeffs: Sequence[int], z0: np.ndarray, digits: int, max_sweeps: int):
    """Gauss-Seidel Aberth sweeps in ``digits``-digit complex arithmetic.

    A root stops moving once its relative step is below ``10**-POLISH_TARGET``.
    The level is abandoned as soon as an unconverged root has ``|p(z)|``
    inside the Horner rounding bound: its steps are then noise and only more
    precision helps.  Returns ``(roots, steps, status)`` with status one of
    ``"converged"``, ``"noise"`` or ``"cap"``.
    """
    bits = int(digits * 3.33) + 8
    with gmpy2.context(gmpy2.get_context(), precision=bits):
        a = [gmpy2.mpfr(c) for c in reversed(coeffs)]
        absa = [abs(c) for c in a]
        n = len(a) - 1
        unit = gmpy2.mpfr(2) ** (-bits) * 4 * (2 * n + 1)
        z = [gmpy2.mpc(complex(v)) for v in z0]
        tol = gmpy2.mpfr(10) ** (-POLISH_TARGET)
        steps = [gmpy2.mpfr("inf")] * n
        active = set(range(n))
        status = "cap"
        for _ in range(max_sweeps):
            noisy = False
            for k in sorted(active):
                zk = z[k]
                r = abs(zk)
                pv, dv, mag = a[0], gmpy2.mpc(0), absa[0]
                for coef, acoef in zip(a[1:], absa[1:]):
                    dv = dv * zk + pv
                    pv = pv * zk + coef
                    mag = mag * r + acoef
                if pv == 0:
                    steps[k] = gmpy2.mpfr(0)
                    continue
                s = sum(1 / (zk - z[j]) for j in range(n) if j != k)
                w = 1 / (dv / pv - s)
                z[k] = zk - w
                steps[k] = abs(w) / (1 + abs(z[k]))
                if not steps[k] < tol and abs(pv) <= unit * mag:
                    noisy = True
            active = {k for k in active if not steps[k] < tol}
            if not active:
                status = "converged"
                break
            if noisy:
                status = "noise"
                break
        return (
            np.array([complex(v) for v in z]),
            np.array([float(v) for v in steps]),
            status,
        )


def find_complex_roots(
    p: IntPolynomial,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    max_iter: int = MAX_ITER,
    polish: bool = True,
) -> RootFinding:
    """All complex roots of ``p`` by simultaneous Aberth-Ehrlich iteration.

    ``p`` must have nonzero constant term (see :func:`deflate_zero`).

    The first stage runs in double precision from points on a circle.  A root
    is frozen once its step drops below ``tol * (1 + |z|)`` or its residual
    falls inside the Horner rounding bound, after which no double step can
    improve it.  Domination polynomials often have roots whose condition
    number exceeds ``1/eps`` (the star family near -1/2 is a typical case), so
    with ``polish`` the iterate is refined by multiprecision sweeps,
    doubling the working precision from 30 digits until every step is below
    ``1e-20`` relative.  ``converged`` is False if either stage hits its cap;
    the roots are then the last iterate.
    """
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    if p[0] == 0:
        raise ValueError("constant term is zero; deflate the zero root first")
    c = _float_coeffs(p)
    n = p.degree
    norm = float(np.abs(c).sum())
    z = initial_guesses(p, seed)
    step = np.full(n, np.inf)
    active = np.ones(n, dtype=bool)
    it = 0
    while active.any() and it < max_iter:
        it += 1
        za = z[active]
        ratio, res, bound = _ratio_and_residual(c, za)
        diff = za[:, None] - z[None, :]
        diff[np.arange(len(za)), np.flatnonzero(active)] = np.inf
        with np.errstate(divide="ignore", invalid="ignore"):
            w = 1 / (ratio - (1 / diff).sum(axis=1))
        w = np.where(np.isfinite(w), w, 0)
        # an exact hit (p(z)=0) makes ratio infinite and the step zero
        w = np.where(res == 0, 0, w)
        z[active] = za - w
        step[active] = np.abs(w)
        done = (np.abs(w) < tol * (1 + np.abs(z[active]))) | (res <= bound)
        idx = np.flatnonzero(active)
        active[idx[done]] = False
    converged = not active.any()
    digits = 0
    if polish and n > 1:
        converged = False
        digits = POLISH_START_DIGITS
        while digits <= POLISH_MAX_DIGITS:
            z, step, status = _polish(p.coeffs, z, digits, POLISH_SWEEPS)
            converged = status == "converged"
            if status != "noise":
                break
            digits *= 2
        digits = min(digits, POLISH_MAX_DIGITS)
    _, res, _ = _ratio_and_residual(c, z)
    return RootFinding(
        roots=z,
        residuals=res / norm,
        corrections=step,
        converged=converged,
        iterations=it,
        seed=seed,
        digits=digits,
    )


# -- region statistics -------------------------------------------------------

@dataclass
class RHPAnalysis:
    max_real_part: float
    has_rhp_root: bool
    boundary_indeterminate: list[complex] = field(default_factory=list)


def rhp_analysis(roots: Sequence[complex], guard: float = RHP_GUARD) -> RHPAnalysis:
    """Largest real part and whether it clears ``guard`` into the right half-plane."""
    roots = np.asarray(roots, dtype=complex)
    if roots.size == 0:
        raise ValueError("empty root list")
    top = float(roots.real.max())
    boundary = [complex(z) for z in roots if abs(z.real) <= guard]
    return RHPAnalysis(top, top > guard, boundary)


@dataclass
class StarRootLocation:
    n: int
    window: tuple[float, float]
    intervals: list[tuple[Fraction, Fraction]]
    in_window: list[bool]

    @property
    def leftmost(self) -> tuple[Fraction, Fraction]:
        return self.intervals[0]

    @property
    def any_in_window(self) -> bool:
        return any(self.in_window)


def star_real_root_locate(n: int, width: Rational = Fraction(1, 10**9)) -> StarRootLocation:
    """Isolate every negative real root of ``D(K_{1,n})`` and test it against ``(-2n, -ln n)``."""
    from .families import star

    if n < 3:
        raise ValueError("need n >= 3")
    _, q = deflate_zero(star(n))
    intervals = isolate_real_roots(q, b=Fraction(0), width=width)
    lo_w, hi_w = -2.0 * n, -math.log(n)
    inside = [lo > lo_w and float(hi) < hi_w for lo, hi in intervals]
    return StarRootLocation(n, (lo_w, hi_w), intervals, inside)


# -- limit-curve diagnostic ---------------------------------------------------

_S3 = math.sqrt(3) / 2
_POINTS = np.array([-0.5 + _S3 * 1j, -0.5 - _S3 * 1j])
_R_MAX = (3 + math.sqrt(5)) / 2


def _curve(r: np.ndarray) -> np.ndarray:
    """Upper branch of ``|1+z|^2 = |z|`` parametrized by ``r = |z|``, ``1 <= r <= (3+sqrt5)/2``."""
    x = (r - 1 - r * r) / 2
    y = np.sqrt(np.maximum(r * r - x * x, 0))
    return x + 1j * y


def _distance_to_curve(z: np.ndarray, samples: int = 4001, rounds: int = 60) -> np.ndarray:
    zq = np.where(z.imag >= 0, z, z.conj())  # the curve is symmetric about the real axis
    r = np.linspace(1.0, _R_MAX, samples)
    d = np.abs(zq[:, None] - _curve(r)[None, :])
    best = d.argmin(axis=1)
    h = r[1] - r[0]
    lo = np.clip(r[best] - h, 1.0, _R_MAX)
    hi = np.clip(r[best] + h, 1.0, _R_MAX)
    phi = (math.sqrt(5) - 1) / 2
    for _ in range(rounds):
        m1 = hi - phi * (hi - lo)
        m2 = lo + phi * (hi - lo)
        left = np.abs(zq - _curve(m1)) < np.abs(zq - _curve(m2))
        hi = np.where(left, m2, hi)
        lo = np.where(left, lo, m1)
    return np.abs(zq - _curve((lo + hi) / 2))


def _distance_to_arc(z: np.ndarray) -> np.ndarray:
    u = z + 1
    theta = np.angle(u)
    on_arc = np.abs(theta) < np.pi / 3
    radial = np.abs(np.abs(u) - 1)
    ends = np.abs(z[:, None] - _POINTS[None, :]).min(axis=1)
    return np.where(on_arc, radial, ends)


@dataclass
class LimitCurveDiagnostic:
    """Distance of each root to the known limit loci of the K_{n,n} family."""

    roots: np.ndarray
    distances: np.ndarray

    @property
    def median(self) -> float:
        return float(np.median(self.distances))

    @property
    def max(self) -> float:
        return float(self.distances.max())


def limit_curve_distance(roots: Sequence[complex]) -> LimitCurveDiagnostic:
    """Euclidean distance to the union of the arc ``|z+1| = 1, Re z > -1/2``,
    the points ``-1/2 +- (sqrt3/2) i`` and the curve ``|1+z|^2 = |z|, Re z < -1/2``.

    Diagnostic only: nothing about convergence is asserted.
    """
    z = np.asarray(roots, dtype=complex).ravel()
    if z.size == 0:
        return LimitCurveDiagnostic(z, np.zeros(0))
    points = np.abs(z[:, None] - _POINTS[None, :]).min(axis=1)
    d = np.minimum(np.minimum(_distance_to_arc(z), points), _distance_to_curve(z))
    return LimitCurveDiagnostic(z, d)


# -- full report ---------------------------------------------------------------

@dataclass
class RootReport:
    degree: int
    zero_root_multiplicity: int
    roots: np.ndarray
    residuals: np.ndarray
    corrections: np.ndarray
    converged: bool
    iterations: int
    seed: int
    max_real_part: float | None
    has_rhp_root: bool
    boundary_indeterminate: list[complex]
    certified_real_root_count: int | None = None
    real_root_intervals: list[tuple[Fraction, Fraction]] | None = None
    limit_curves: LimitCurveDiagnostic | None = None

    def intervals_consistent(self, imag_tol: float = 1e-8) -> bool | None:
        """Does each certified interval hold exactly one numerically found real root?"""
        if self.real_root_intervals is None:
            return None
        real = self.roots.real[np.abs(self.roots.imag) < imag_tol]
        return all(
            int(((real >= float(lo)) & (real <= float(hi))).sum()) == 1
            for lo, hi in self.real_root_intervals
        ) and len(real) == len(self.real_root_intervals)

    def to_dict(self) -> dict:
        out = {
            "degree": self.degree,
            "zero_root_multiplicity": self.zero_root_multiplicity,
            "converged": self.converged,
            "iterations": self.iterations,
            "seed": self.seed,
            "max_real_part": self.max_real_part,
            "has_rhp_root": self.has_rhp_root,
            "boundary_indeterminate": [[z.real, z.imag] for z in self.boundary_indeterminate],
            "complex_roots": [
                {"re": float(z.real), "im": float(z.imag), "residual": float(r), "correction": float(s)}
                for z, r, s in zip(self.roots, self.residuals, self.corrections)
            ],
        }
        if self.certified_real_root_count is not None:
            out["certified_real_root_count"] = str(self.certified_real_root_count)
            out["real_root_intervals"] = [[str(lo), str(hi)] for lo, hi in self.real_root_intervals]
            out["intervals_consistent"] = self.intervals_consistent()
        if self.limit_curves is not None:
            out["limit_curves"] = {
                "distances": [float(d) for d in self.limit_curves.distances],
                "median": self.limit_curves.median,
                "max": self.limit_curves.max,
            }
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def root_report(
    p: IntPolynomial, certify: bool = False, limit_curves: bool = False, seed: int = 0
) -> RootReport:
    """Deflate the zero root, find the remaining roots numerically and optionally certify real ones."""
    k, q = deflate_zero(p)
    if q.degree >= 1:
        found = find_complex_roots(q, seed=seed)
        rhp = rhp_analysis(found.roots)
        report = RootReport(
            p.degree, k, found.roots, found.residuals, found.corrections,
            found.converged, found.iterations, seed,
            rhp.max_real_part, rhp.has_rhp_root, rhp.boundary_indeterminate,
        )
    else:
        empty = np.zeros(0)
        report = RootReport(p.degree, k, empty.astype(complex), empty, empty, True, 0, seed,
                            None, False, [])
    if certify:
        intervals = isolate_real_roots(q)
        report.real_root_intervals = intervals
        report.certified_real_root_count = len(intervals)
    if limit_curves:
        report.limit_curves = limit_curve_distance(report.roots)
    return report
