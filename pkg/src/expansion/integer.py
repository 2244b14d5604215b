from typing import List

from src.words.models import Digit, FiniteWord


def int_negabase(n: int, b: int) -> FiniteWord:
    """
    The (-b)-representation of an integer, most significant digit first.

    Args:
        n: any integer
        b: base magnitude, b >= 2

    Returns:
        Digits in {0, ..., b-1} without leading zeros; 0 is ``(0,)``
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if n == 0:
        return (0,)
    digits: List[Digit] = []
    while n != 0:
        r = n % b
        digits.append(r)
        n = (n - r) // (-b)
    return tuple(reversed(digits))


def int_to_base(n: int, b: int) -> FiniteWord:
    """Standard base-b digits of n >= 0."""
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if n < 0:
        raise ValueError(f"expected a natural number, got {n}")
    if n == 0:
        return (0,)
    digits: List[Digit] = []
    while n:
        n, r = divmod(n, b)
        digits.append(r)
    return tuple(reversed(digits))
