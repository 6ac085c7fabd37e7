"""Exact arithmetic for Griesmer codes: finite fields, linear codes, point
multisets, structured bases, Galois-ring divisibility tests and a theorem
harness."""

from .finite_field import FieldSpec, field_of_order, make_field
from .linear_code import LinearCode, griesmer_bound
from .codefile import read_code, write_code

__version__ = "0.1.0"

__all__ = ["FieldSpec", "LinearCode", "field_of_order", "griesmer_bound",
           "make_field", "read_code", "write_code"]
