"""Exact verification of skein algebras, rank-one DAHAs, and quantized Coulomb branches."""

__version__ = "0.1.0"

from .exactring import LaurentPoly, RatFn, SymbolTable, parse_poly
from .qdiffop import DiffOp, OpSpace, Subst

__all__ = ["LaurentPoly", "RatFn", "SymbolTable", "parse_poly", "DiffOp", "OpSpace", "Subst", "__version__"]
