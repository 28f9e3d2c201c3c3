"""Normality of elements of finite field extensions via idempotents of F_q[x]/(x^n - 1)."""

from .cyclo_idem import gauss_periods, idempotents_crt, idempotents_matrix, q_class_partition
from .errors import InternalInvariantError, KNormalError, ParseError, PreconditionError
from .field_core import build_tower, parse_element
from .linearized import LinearizedPoly, compose, evaluate, minimal_q_poly, phi
from .normality import (
    NormalityReport,
    classify,
    classify_special,
    histogram,
    normality_via_divisors,
    normality_via_gcd,
    normality_via_idempotents,
    normality_via_Mi,
    one_normal_test,
)
from .poly_ring import Poly, factor_xn_minus_1

__all__ = [
    "InternalInvariantError",
    "KNormalError",
    "LinearizedPoly",
    "NormalityReport",
    "ParseError",
    "Poly",
    "PreconditionError",
    "build_tower",
    "classify",
    "classify_special",
    "compose",
    "evaluate",
    "factor_xn_minus_1",
    "gauss_periods",
    "histogram",
    "idempotents_crt",
    "idempotents_matrix",
    "minimal_q_poly",
    "normality_via_divisors",
    "normality_via_gcd",
    "normality_via_idempotents",
    "normality_via_Mi",
    "one_normal_test",
    "parse_element",
    "phi",
    "q_class_partition",
]
