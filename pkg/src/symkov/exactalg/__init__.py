"""Exact arithmetic layer: rationals, polynomials, Q(z), and Q(z, sqrt(w))."""

from .numbers import (QQ, QuadNum, UnsupportedFieldError, qq, qq_floor,
                      qq_is_integer, quad_roots, rational_sqrt,
                      squarefree_decompose_int, value_conj)
from .poly import P_ONE, P_Z, P_ZERO, Poly, lagrange_interpolate
from .quadext import (BaseField, BaseFieldType, QuadExtField, QuadExtFunc,
                      canonical_radicand, quadext_arith)
from .ratfunc import (RF_ONE, RF_Z, RF_ZERO, PartialFractions, RatFunc,
                      is_rational_log_derivative, log_derivative, mod_inverse,
                      partial_fractions, principal_part_at_factor, ratfunc,
                      rational_residues, residue_element, rf_normalize,
                      split_integer_log_part, sum_over_roots)

__all__ = [
    "QQ", "QuadNum", "UnsupportedFieldError", "qq", "qq_floor",
    "qq_is_integer", "quad_roots", "rational_sqrt",
    "squarefree_decompose_int", "value_conj",
    "P_ONE", "P_Z", "P_ZERO", "Poly", "lagrange_interpolate",
    "BaseField", "BaseFieldType", "QuadExtField", "QuadExtFunc",
    "canonical_radicand", "quadext_arith",
    "RF_ONE", "RF_Z", "RF_ZERO", "PartialFractions", "RatFunc",
    "is_rational_log_derivative", "log_derivative", "mod_inverse",
    "partial_fractions", "principal_part_at_factor", "ratfunc",
    "rational_residues", "residue_element", "rf_normalize",
    "split_integer_log_part", "sum_over_roots",
]
