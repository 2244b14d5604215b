"""
The (-beta)-transformation T(x) = -beta x - floor(-beta x + beta/(beta+1)) on
[-beta/(beta+1), 1/(beta+1)), its expansions and the admissibility test.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from src.expansion.models import OrbitResult
from src.expansion.orbit import resolve_cap, run_orbit
from src.numberfield.intervals import floor_of, in_half_open
from src.numberfield.models import FieldElement, NumberField
from src.utils.errors import CapExceeded, OutOfInterval
from src.words.models import Digit, EpWord, FiniteWord, Order, canonicalize
from src.words.order import alt_compare

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def _constants(f: NumberField) -> Tuple[FieldElement, FieldElement, FieldElement]:
    beta = f.beta()
    right = 1 / (beta + 1)
    return -beta * right, right, beta * right


def left_endpoint(f: NumberField) -> FieldElement:
    """-beta/(beta+1)"""
    return _constants(f)[0]


def right_endpoint(f: NumberField) -> FieldElement:
    """1/(beta+1), excluded from the interval"""
    return _constants(f)[1]


def in_interval(x: FieldElement) -> bool:
    left, right, _ = _constants(x.field)
    return in_half_open(x, left, right)


def negative_alphabet(f: NumberField) -> range:
    return range(0, floor_of(f.beta()) + 1)


def t_minus_beta_step(x: FieldElement) -> Tuple[Digit, FieldElement]:
    """
    One step of T_{-beta}.

    Args:
        x: point of [-beta/(beta+1), 1/(beta+1))

    Returns:
        (digit, T_{-beta}(x))
    """
    if not in_interval(x):
        raise OutOfInterval(f"{x} is outside [-beta/(beta+1), 1/(beta+1))")
    f = x.field
    y = -f.times_beta(x)
    digit = floor_of(y + _constants(f)[2])
    return digit, y - digit


def d_minus_beta(x: FieldElement, n: int) -> FiniteWord:
    digits: List[Digit] = []
    for _ in range(n):
        digit, x = t_minus_beta_step(x)
        digits.append(digit)
    return tuple(digits)


def orbit_expansion(x: FieldElement, cap: Optional[int] = None) -> OrbitResult:
    """
    Iterate T_{-beta} until an exact orbit point repeats.

    Args:
        x: starting point in the interval
        cap: maximal number of steps; the configured orbit_cap when None

    Returns:
        OrbitResult, periodic with the (-beta)-expansion as EpWord, or the
        digits produced so far when the cap is reached
    """
    return run_orbit(x, t_minus_beta_step, cap)


@lru_cache(maxsize=64)
def reference_words(f: NumberField, cap: Optional[int] = None) -> Tuple[EpWord, EpWord]:
    """d = d_{-beta}(-beta/(beta+1)) and the upper reference word d*."""
    result = orbit_expansion(left_endpoint(f), cap)
    if not result.is_periodic:
        raise CapExceeded(
            f"expansion of -beta/(beta+1) not periodic within {resolve_cap(cap)} steps",
            cap=resolve_cap(cap),
        )
    d = result.digits
    if d.is_purely_periodic and d.p % 2 == 1:
        per = (0,) + d.period[:-1] + (d.period[-1] - 1,)
        return d, canonicalize(EpWord((), per))
    return d, canonicalize(EpWord((0,) + d.preperiod, d.period))


def d_left(f: NumberField, cap: Optional[int] = None) -> EpWord:
    return reference_words(f, cap)[0]


def d_star(f: NumberField, cap: Optional[int] = None) -> EpWord:
    return reference_words(f, cap)[1]


def is_admissible(w: Union[FiniteWord, EpWord], f: NumberField, cap: Optional[int] = None) -> bool:
    """
    (-beta)-admissibility.

    An EpWord is admissible when every shift s satisfies d <=_alt s <_alt d*.
    A finite word is admissible when it is a factor of the (-beta)-shift.
    """
    if not isinstance(w, EpWord):
        from src.automata.construct import build_shift_automaton
        from src.automata.ops import accepts

        return accepts(build_shift_automaton(f, cap), w)
    d, star = reference_words(f, cap)
    alphabet = negative_alphabet(f)
    if any(a not in alphabet for a in w.digits()):
        return False
    for n in range(w.m + w.p):
        s = w.shift(n)
        if alt_compare(d, s) == Order.GT or alt_compare(s, star) != Order.LT:
            return False
    return True
