"""Exact domination polynomials of graphs and certified analysis of their roots."""

from .engine import (
    DominationPolynomial,
    Method,
    brute_force,
    cycle_poly,
    disjoint_union_poly,
    odot_recurrence,
    p_v,
    path_poly,
    vertex_recurrence,
)
from .errors import BudgetExceededError, EvaluationOverflowError, InterpolationError
from .graph import FamilyKind, FamilySpec, Graph, build_family, parse_family
from .poly import IntPolynomial, eval_complex, eval_rational, lagrange_interpolate
from .roots import (
    RootReport,
    certify_no_nonzero_real_roots,
    find_complex_roots,
    root_report,
    sturm_real_root_count,
)

__all__ = [
    "BudgetExceededError",
    "DominationPolynomial",
    "EvaluationOverflowError",
    "FamilyKind",
    "FamilySpec",
    "Graph",
    "IntPolynomial",
    "InterpolationError",
    "Method",
    "RootReport",
    "brute_force",
    "build_family",
    "certify_no_nonzero_real_roots",
    "cycle_poly",
    "disjoint_union_poly",
    "eval_complex",
    "eval_rational",
    "find_complex_roots",
    "lagrange_interpolate",
    "odot_recurrence",
    "p_v",
    "parse_family",
    "path_poly",
    "root_report",
    "sturm_real_root_count",
    "vertex_recurrence",
]
