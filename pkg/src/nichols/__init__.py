"""Exact Nichols-algebra computation for braided vector spaces over Z^r."""

from .scalars import Scalar, ScalarError, PoleError, parse_scalar

__all__ = [
    "Scalar",
    "ScalarError",
    "PoleError",
    "parse_scalar",
]
