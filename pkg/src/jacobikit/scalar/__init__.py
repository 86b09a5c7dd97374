"""Coefficient field: exact fractions of exponential polynomials on a chart."""

from ._backend import BACKEND
from .field import (
    Chart,
    ExpPoly,
    Q,
    ScalarField,
    eval_approx,
    is_zero,
    partial_derivative,
    scalar_arith,
    to_rational,
)
from .parser import linear_coefficients, parse_scalar
from .printer import format_scalar

__all__ = [
    "BACKEND",
    "Chart",
    "ExpPoly",
    "Q",
    "ScalarField",
    "eval_approx",
    "format_scalar",
    "is_zero",
    "linear_coefficients",
    "parse_scalar",
    "partial_derivative",
    "scalar_arith",
    "to_rational",
]
