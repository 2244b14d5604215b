"""
Exact order decisions in Q(beta) through interval evaluation at beta.
"""

import logging
import math
from fractions import Fraction
from typing import Tuple

from src.config import get_settings
from src.numberfield.field import refine_interval
from src.numberfield.models import FieldElement, Interval
from src.utils.errors import RefinementLimit

logger = logging.getLogger(__name__)


def beta_interval(x: FieldElement, bits: int) -> Interval:
    f = x.field
    return refine_interval(f.min_poly, f.real_root_interval, bits)


def eval_interval(x: FieldElement, interval: Interval) -> Tuple[Fraction, Fraction]:
    """Enclosure of x(beta) given 0 < a <= beta <= b."""
    a, b = interval
    lo = hi = Fraction(0)
    pa = pb = Fraction(1)
    for c in x.coords:
        if c > 0:
            lo += c * pa
            hi += c * pb
        elif c < 0:
            lo += c * pb
            hi += c * pa
        pa *= a
        pb *= b
    return lo, hi


def sign(x: FieldElement) -> int:
    """Exact sign of x(beta)."""
    if x.is_rational:
        c = x.coords[0]
        return (c > 0) - (c < 0)
    settings = get_settings().numberfield
    bits = settings.initial_precision_bits
    for _ in range(settings.max_refinements):
        lo, hi = eval_interval(x, beta_interval(x, bits))
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2
    raise RefinementLimit(f"sign of {x} undecided after {settings.max_refinements} rounds")


def compare(x: FieldElement, y) -> int:
    return sign(x - y)


def floor_of(x: FieldElement) -> int:
    """The integer n with n <= x(beta) < n + 1."""
    if x.is_rational:
        return math.floor(x.coords[0])
    settings = get_settings().numberfield
    bits = settings.initial_precision_bits
    for _ in range(settings.max_refinements):
        lo, hi = eval_interval(x, beta_interval(x, bits))
        if math.floor(lo) == math.floor(hi):
            return math.floor(lo)
        if hi - lo < 1:
            break
        bits *= 2
    else:
        raise RefinementLimit(f"floor of {x} undecided after {settings.max_refinements} rounds")
    # the enclosure straddles one integer
    n = math.floor(lo)
    while sign(x - n) < 0:
        n -= 1
    while sign(x - (n + 1)) >= 0:
        n += 1
    return n


def ceil_of(x: FieldElement) -> int:
    return -floor_of(-x)


def fractional_part(x: FieldElement) -> FieldElement:
    return x - floor_of(x)


def in_half_open(x: FieldElement, lo, hi) -> bool:
    """lo <= x < hi, decided exactly; bounds may be elements or rationals."""
    return sign(x - lo) >= 0 and sign(x - hi) < 0


def approx(x: FieldElement) -> float:
    lo, hi = eval_interval(x, beta_interval(x, 64))
    return float((lo + hi) / 2)
