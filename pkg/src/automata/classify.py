"""
Finite type / sofic classification of the (-beta)-shift and its forbidden factors.
"""

import logging
from typing import FrozenSet, Optional, Set

from src.automata.construct import build_shift_automaton
from src.automata.models import Automaton, Classification, ShiftKind
from src.automata.ops import accepts, words
from src.expansion.negative import reference_words
from src.numberfield.models import NumberField
from src.utils.decorators import log_io
from src.utils.errors import CapExceeded
from src.words.models import EpWord, FiniteWord

logger = logging.getLogger(__name__)


def _candidates(s: EpWord, alphabet, below: bool) -> Set[FiniteWord]:
    """
    Words s_1 ... s_{n-1} b leaving the subshift of a purely periodic s.

    ``below`` selects the lower bound (b makes the suffix alternately smaller
    than s) or the upper bound (alternately larger). Odd periods are unrolled
    twice so that both parities of every period position are covered.
    """
    span = s.p if s.p % 2 == 0 else 2 * s.p
    found = set()
    for n in range(1, span + 1):
        head = s.prefix(n - 1)
        sn = s.digit(n - 1)
        for b in alphabet:
            delta = (-1) ** n * (b - sn)
            if (below and delta < 0) or (not below and delta > 0):
                found.add(head + (b,))
    return found


def _minimal(candidates: Set[FiniteWord], a: Automaton) -> FrozenSet[FiniteWord]:
    return frozenset(
        w for w in candidates if not accepts(a, w) and accepts(a, w[1:]) and accepts(a, w[:-1])
    )


@log_io
def classify(f: NumberField, cap: Optional[int] = None) -> Classification:
    """
    Decide whether the (-beta)-shift is of finite type or sofic.

    Args:
        f: the field of beta
        cap: orbit cap for the expansion of -beta/(beta+1)

    Returns:
        Classification, with the minimal forbidden factors when of finite type
    """
    try:
        d, star = reference_words(f, cap)
    except CapExceeded:
        logger.warning(f"expansion of -beta/(beta+1) for {f.min_poly} not periodic within the cap")
        return Classification(ShiftKind.NOT_SOFIC_OR_UNDETECTED, None, None)

    automaton = build_shift_automaton(f, cap)
    if not d.is_purely_periodic:
        return Classification(ShiftKind.SOFIC_NOT_FINITE_TYPE, None, automaton)

    alphabet = automaton.alphabet
    candidates = _candidates(d, alphabet, below=True)
    if d.p % 2 == 1:
        candidates |= _candidates(star, alphabet, below=False)
    forbidden = _minimal(candidates, automaton)
    logger.info(f"(-beta)-shift of {f.min_poly} is of finite type with {len(forbidden)} forbidden factors")
    return Classification(ShiftKind.FINITE_TYPE, forbidden, automaton)


def minimal_forbidden_factors(a: Automaton, max_length: int) -> FrozenSet[FiniteWord]:
    """Brute-force minimal forbidden words of length <= max_length of a factorial language."""
    found = set()
    for w in words(a.alphabet, max_length):
        if w and not accepts(a, w) and accepts(a, w[1:]) and accepts(a, w[:-1]):
            found.add(w)
    return frozenset(found)
