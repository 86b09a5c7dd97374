"""Exact symbolic tensor calculus for Jacobi, Poisson and Nijenhuis structures."""

from .jacobi import *  # noqa: F401,F403
from .jacobi import __all__ as _jacobi_all
from .scalar import BACKEND, Chart, ScalarField, parse_scalar
from .tensor import *  # noqa: F401,F403
from .tensor import __all__ as _tensor_all

__version__ = "0.1.0"

__all__ = ["BACKEND", "Chart", "ScalarField", "parse_scalar", *_jacobi_all, *_tensor_all]
