"""Finite fields, sparse polynomials and dense linear algebra over them."""
from .field import FieldError, FiniteField, default_modulus, is_irreducible, is_prime
from .poly import InexactDivisionError, Polynomial, ZeroValuationError, monomials

__all__ = [
    "FieldError",
    "FiniteField",
    "InexactDivisionError",
    "Polynomial",
    "ZeroValuationError",
    "default_modulus",
    "is_irreducible",
    "is_prime",
    "monomials",
]
