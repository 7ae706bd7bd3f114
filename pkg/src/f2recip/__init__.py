"""Reciprocals of sets of natural numbers, computed as power series over GF(2)."""

from .errors import (EmptySetError, NonCanonicalError, NotInvertibleError, PreconditionError,
                     RangeError, ResourceLimitError)
from .f2poly import F2Poly, factorize, order, poly_from_index, poly_report, pstar
from .f2series import BitSeries, from_indices, mul_trunc, reciprocal
from .setgen import generate, parse_setspec

__version__ = "0.1.0"

__all__ = [
    "BitSeries", "F2Poly", "from_indices", "mul_trunc", "reciprocal",
    "factorize", "order", "poly_from_index", "poly_report", "pstar",
    "generate", "parse_setspec",
    "EmptySetError", "NonCanonicalError", "NotInvertibleError", "PreconditionError",
    "RangeError", "ResourceLimitError",
]
