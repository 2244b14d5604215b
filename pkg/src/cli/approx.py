"""
Approximate computations for a base given only as a decimal (--base-float).

beta is replaced by the exact rational value of the decimal string, so
digits are exact for that rational but only approximate the intended
algebraic base; periodicity is not detected.
"""

import math
from fractions import Fraction
from typing import List

from src.utils.errors import OutOfInterval
from src.words.models import Digit, FiniteWord


def approx_digits(beta: Fraction, x: Fraction, n: int, base_sign: int) -> FiniteWord:
    """First n digits of x under T_{-beta} (base_sign -1) or T_beta (base_sign +1)."""
    digits: List[Digit] = []
    if base_sign < 0:
        left, right = -beta / (beta + 1), 1 / (beta + 1)
        if not left <= x < right:
            raise OutOfInterval(f"{x} is outside [{left}, {right})")
        for _ in range(n):
            digit = math.floor(-beta * x + beta / (beta + 1))
            x = -beta * x - digit
            digits.append(digit)
    else:
        if not 0 <= x <= 1:
            raise OutOfInterval(f"{x} is outside [0, 1]")
        for _ in range(n):
            digit = math.floor(beta * x)
            x = beta * x - digit
            digits.append(digit)
    return tuple(digits)


def approx_delay(beta: Fraction) -> int:
    top = math.ceil(beta) - 1
    slack = 1 - (beta - math.floor(beta))
    delta = 1
    while top / beta ** (delta - 1) + top / beta ** delta > slack:
        delta += 1
    return delta
