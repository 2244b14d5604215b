"""
Alternate and short-alternate orders, and the asmin / asmax predicates.
"""

import math
from typing import Sequence, Union

from src.utils.errors import LengthMismatch
from src.words.models import Digit, EpWord, FiniteWord, Order, Word


def _alt_digits(u: Sequence[Digit], v: Sequence[Digit]) -> Order:
    for k, (a, b) in enumerate(zip(u, v), start=1):
        if a != b:
            # (-1)^k (u_k - v_k) < 0
            less = a > b if k % 2 else a < b
            return Order.LT if less else Order.GT
    return Order.EQ


def comparison_length(u: EpWord, v: EpWord) -> int:
    """Two eventually periodic words agreeing on this many digits are equal."""
    return max(u.m, v.m) + math.lcm(u.p, v.p)


def alt_compare(u: Word, v: Word) -> Order:
    """
    Compare two words in the alternate order.

    Finite words must have equal length. A finite word compared with an
    eventually periodic one is matched against the prefix of the same length.
    """
    if isinstance(u, EpWord) and isinstance(v, EpWord):
        n = comparison_length(u, v)
        return _alt_digits(u.prefix(n), v.prefix(n))
    if isinstance(u, EpWord):
        u = u.prefix(len(v))
    elif isinstance(v, EpWord):
        v = v.prefix(len(u))
    if len(u) != len(v):
        raise LengthMismatch(f"alternate order needs equal lengths, got {len(u)} and {len(v)}")
    return _alt_digits(u, v)


def short_alt_compare(u: FiniteWord, v: FiniteWord, alphabet_min: Digit = 0) -> Order:
    """Short-alternate order on finite words (numeric order of integer (-b)-representations)."""
    lu, lv = len(u), len(v)
    if lu % 2 != lv % 2:
        if lu < lv:
            u = (alphabet_min,) * (lv - lu) + tuple(u)
        else:
            v = (alphabet_min,) * (lu - lv) + tuple(v)
        lu = lv = len(u)
    if lu != lv:
        if lu % 2:
            return Order.LT if lu < lv else Order.GT
        return Order.LT if lu > lv else Order.GT
    if lu % 2:
        return _alt_digits((alphabet_min,) + tuple(u), (alphabet_min,) + tuple(v))
    return _alt_digits(u, v)


def is_asmin(s: EpWord, alphabet_max: Digit) -> bool:
    """s_1 is the maximal digit and s is alternately below every shift of itself."""
    if s.digit(0) != alphabet_max:
        return False
    return all(alt_compare(s, s.shift(n)) != Order.GT for n in range(1, s.m + s.p + 1))


def is_asmax(s: EpWord, alphabet_min: Digit, alphabet_max: Digit) -> bool:
    """Dual of is_asmin: s_1 is the minimal digit and s is above all its shifts."""
    if s.digit(0) != alphabet_min:
        return False
    return all(alt_compare(s, s.shift(n)) != Order.LT for n in range(1, s.m + s.p + 1))


def complement(w: Union[FiniteWord, EpWord], lo: Digit, hi: Digit) -> Union[FiniteWord, EpWord]:
    """The digit map a -> lo + hi - a; it reverses the alternate order."""
    if isinstance(w, EpWord):
        return EpWord(tuple(lo + hi - a for a in w.preperiod), tuple(lo + hi - a for a in w.period))
    return tuple(lo + hi - a for a in w)
