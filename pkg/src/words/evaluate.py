"""
Exact value of digit words in base beta or -beta.
"""

from typing import Sequence

from src.numberfield.models import FieldElement, NumberField
from src.words.models import Digit, EpWord


def signed_base(f: NumberField, base_sign: int) -> FieldElement:
    if base_sign not in (1, -1):
        raise ValueError(f"base_sign must be +1 or -1, got {base_sign}")
    return f.beta() * base_sign


def eval_finite(w: Sequence[Digit], base_sign: int, f: NumberField, scale: int = 0) -> FieldElement:
    """
    Value of w_1 ... w_L read in base (base_sign * beta).

    Args:
        w: digits, most significant first
        base_sign: -1 for base -beta, +1 for base beta
        f: the field
        scale: position of the radix point from the right; 0 reads w as an
            integer, len(w) reads it as the fraction .w

    Returns:
        sum of w_i * b^(L - i - scale)
    """
    b = signed_base(f, base_sign)
    acc = f.zero()
    for digit in w:
        acc = acc * b + digit
    if scale:
        acc = acc * b ** (-scale)
    return acc


def eval_ep(w: EpWord, base_sign: int, f: NumberField) -> FieldElement:
    """Value of the fractional expansion .preperiod (period)^omega."""
    b = signed_base(f, base_sign)
    head = eval_finite(w.preperiod, base_sign, f, scale=w.m)
    cycle = eval_finite(w.period, base_sign, f, scale=w.p)
    tail = cycle / (1 - b ** (-w.p))
    return head + tail * b ** (-w.m)
