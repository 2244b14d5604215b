from src.numberfield.field import (
    arith,
    conjugate_abs_bounds,
    conjugate_embeddings,
    conjugates,
    eval_box,
    field_from_integer,
    is_pisot,
    lattice_vector,
    make_field,
    parse_polynomial,
    refine,
)
from src.numberfield.intervals import approx, ceil_of, compare, floor_of, fractional_part, in_half_open, sign
from src.numberfield.models import FieldElement, IntPolynomial, LatticeVector, NumberField

__all__ = [
    "FieldElement",
    "IntPolynomial",
    "LatticeVector",
    "NumberField",
    "approx",
    "arith",
    "ceil_of",
    "compare",
    "conjugate_abs_bounds",
    "conjugate_embeddings",
    "conjugates",
    "eval_box",
    "field_from_integer",
    "floor_of",
    "fractional_part",
    "in_half_open",
    "is_pisot",
    "lattice_vector",
    "make_field",
    "parse_polynomial",
    "refine",
    "sign",
]
