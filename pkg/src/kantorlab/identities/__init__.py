"""Identities: representation, parsing, checking, and the variety registry."""
from .check import Verdict, check_identity, evaluate_identity, generic_element
from .dsl import IdentitySyntaxError, format_identity, parse_identity
from .expr import IdentityExpr, Prod, Var, left_normed, param_symbol, standard_polynomial
from .linearize import homogeneous_components, linearize
from .registry import VarietySpec, dump_registry, get_variety, variety_registry
from .variety import VarietyReport, check_variety, fit_parameter, product_mapping

__all__ = [
    "Verdict",
    "check_identity",
    "evaluate_identity",
    "generic_element",
    "IdentitySyntaxError",
    "format_identity",
    "parse_identity",
    "IdentityExpr",
    "Prod",
    "Var",
    "left_normed",
    "param_symbol",
    "standard_polynomial",
    "homogeneous_components",
    "linearize",
    "VarietySpec",
    "dump_registry",
    "get_variety",
    "variety_registry",
    "VarietyReport",
    "check_variety",
    "fit_parameter",
    "product_mapping",
]
