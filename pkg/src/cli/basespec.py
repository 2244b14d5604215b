"""
Base specification shared by the subcommands: an integer base, a minimal
polynomial, or an approximate decimal, together with the sign of the base.
"""

import logging
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from src.numberfield.field import field_from_integer, make_field, parse_polynomial
from src.numberfield.models import NumberField
from src.utils.errors import UsageError

logger = logging.getLogger(__name__)


class BaseMode(str, Enum):
    INTEGER = "integer"
    MIN_POLY = "min-poly"
    FLOAT = "float"


class BaseSign(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


class BaseSpec(BaseModel):
    """How the user named the base"""
    mode: BaseMode = Field(..., description="Integer base, minimal polynomial or decimal approximation")
    sign: BaseSign = Field(BaseSign.NEGATIVE, description="Base beta or base -beta")
    integer: Optional[int] = Field(None, description="b for an integer base")
    coefficients: Optional[List[int]] = Field(None, description="Minimal polynomial, constant term first")
    decimal: Optional[str] = Field(None, description="Decimal approximation of beta")

    @model_validator(mode="after")
    def _fields_match_mode(self) -> "BaseSpec":
        if self.mode == BaseMode.INTEGER and (self.integer is None or self.integer < 2):
            raise ValueError("an integer base must be at least 2")
        if self.mode == BaseMode.MIN_POLY and not self.coefficients:
            raise ValueError("a minimal polynomial needs coefficients")
        if self.mode == BaseMode.FLOAT:
            if self.decimal is None:
                raise ValueError("a float base needs a decimal value")
            try:
                value = Fraction(self.decimal)
            except ValueError:
                raise ValueError(f"{self.decimal!r} is not a decimal number") from None
            if value <= 1:
                raise ValueError("beta must exceed 1")
        return self

    @property
    def is_exact(self) -> bool:
        return self.mode != BaseMode.FLOAT

    @property
    def base_sign(self) -> int:
        return -1 if self.sign == BaseSign.NEGATIVE else 1

    @property
    def approximate_beta(self) -> Fraction:
        if self.mode != BaseMode.FLOAT:
            raise UsageError("only a --base-float base has a decimal value")
        return Fraction(self.decimal)

    def field(self) -> NumberField:
        if self.mode == BaseMode.INTEGER:
            return field_from_integer(self.integer)
        if self.mode == BaseMode.MIN_POLY:
            return make_field(parse_polynomial(",".join(str(c) for c in self.coefficients)))
        raise UsageError("this subcommand needs an exact base (--base, --base-neg-poly or --base-pos-poly)")


def base_spec_from_args(args) -> BaseSpec:
    """Build the BaseSpec from parsed arguments; exactly one base flag must be present."""
    given = [
        name
        for name in ("base", "base_neg_poly", "base_pos_poly", "base_float")
        if getattr(args, name, None) is not None
    ]
    if len(given) != 1:
        raise UsageError("give exactly one of --base, --base-neg-poly, --base-pos-poly, --base-float")
    positive = getattr(args, "positive", False)
    sign = BaseSign.POSITIVE if positive else BaseSign.NEGATIVE
    try:
        if args.base is not None:
            return BaseSpec(mode=BaseMode.INTEGER, sign=sign, integer=args.base)
        if args.base_float is not None:
            logger.warning("approximate base: digits are computed with a rational stand-in for beta")
            return BaseSpec(mode=BaseMode.FLOAT, sign=sign, decimal=args.base_float)
        text = args.base_neg_poly if args.base_neg_poly is not None else args.base_pos_poly
        sign = BaseSign.NEGATIVE if args.base_neg_poly is not None else BaseSign.POSITIVE
        coefficients = parse_polynomial(text).coefficients
        return BaseSpec(mode=BaseMode.MIN_POLY, sign=sign, coefficients=list(coefficients))
    except ValueError as e:
        raise UsageError(str(e)) from None
