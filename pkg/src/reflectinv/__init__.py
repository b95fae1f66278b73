"""Invariant mixed forms of finite reflection groups over finite fields."""
from .algebra import FiniteField, Polynomial

SCHEMA = "reflectinv/1"

__all__ = ["FiniteField", "Polynomial", "SCHEMA"]
