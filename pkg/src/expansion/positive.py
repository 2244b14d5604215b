"""
The beta-transformation T(x) = beta x - floor(beta x), d_beta(1), d*_beta(1)
and Parry's admissibility condition.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from src.expansion.models import OrbitResult
from src.expansion.orbit import resolve_cap, run_orbit
from src.numberfield.intervals import ceil_of, floor_of, sign
from src.numberfield.models import FieldElement, NumberField
from src.utils.errors import CapExceeded, OutOfInterval
from src.words.models import Digit, EpWord, FiniteWord, canonicalize
from src.words.order import comparison_length

logger = logging.getLogger(__name__)


def positive_alphabet(f: NumberField) -> range:
    """A_beta = {0, ..., ceil(beta) - 1}"""
    return range(0, ceil_of(f.beta()))


def t_beta_step(x: FieldElement) -> Tuple[Digit, FieldElement]:
    if sign(x) < 0 or sign(x - 1) > 0:
        raise OutOfInterval(f"{x} is outside [0, 1]")
    y = x.field.times_beta(x)
    digit = floor_of(y)
    return digit, y - digit


def d_beta(x: FieldElement, n: int) -> FiniteWord:
    """First n digits of the greedy beta-expansion of x in [0, 1]."""
    digits: List[Digit] = []
    for _ in range(n):
        digit, x = t_beta_step(x)
        digits.append(digit)
    return tuple(digits)


def beta_orbit_expansion(x: FieldElement, cap: Optional[int] = None) -> OrbitResult:
    """Eventually periodic beta-expansion of x in [0, 1] (finite expansions end in (0))."""
    return run_orbit(x, t_beta_step, cap)


@lru_cache(maxsize=64)
def d_beta_one(f: NumberField, cap: Optional[int] = None) -> EpWord:
    result = beta_orbit_expansion(f.one(), cap)
    if not result.is_periodic:
        raise CapExceeded(f"d_beta(1) not periodic within {resolve_cap(cap)} steps", cap=resolve_cap(cap))
    return result.digits


def is_finite_expansion(w: EpWord) -> bool:
    return w.period == (0,)


@lru_cache(maxsize=64)
def d_star_beta_one(f: NumberField, cap: Optional[int] = None) -> EpWord:
    """(t_1 ... t_{m-1} (t_m - 1))^omega when d_beta(1) = t_1 ... t_m is finite, else d_beta(1)."""
    d = d_beta_one(f, cap)
    if not is_finite_expansion(d):
        return d
    t = d.preperiod
    return canonicalize(EpWord((), t[:-1] + (t[-1] - 1,)))


def _lex_less(u: EpWord, v: EpWord) -> bool:
    n = comparison_length(u, v)
    return u.prefix(n) < v.prefix(n)


def is_beta_admissible(w: Union[FiniteWord, EpWord], f: NumberField, cap: Optional[int] = None) -> bool:
    """
    Parry's condition.

    An EpWord is admissible when every shift is lexicographically smaller than
    d*_beta(1); a finite word when each suffix is at most the prefix of d*_beta(1)
    of the same length.
    """
    star = d_star_beta_one(f, cap)
    alphabet = positive_alphabet(f)
    if isinstance(w, EpWord):
        if any(a not in alphabet for a in w.digits()):
            return False
        return all(_lex_less(w.shift(n), star) for n in range(w.m + w.p))
    w = tuple(w)
    if any(a not in alphabet for a in w):
        return False
    return all(w[i:] <= star.prefix(len(w) - i) for i in range(len(w)))
