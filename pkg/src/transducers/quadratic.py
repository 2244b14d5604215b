"""
Left sequential conversion from base beta to base -beta when beta^2 = a beta + 1.

Blocks x_{2k} x_{2k+1} are read left to right. Writing a block ``c e`` as
``(c+1)(a-e)`` overshoots by beta^{-2(k+1)}; the debt state repays that unit
on the next block.
"""

import logging
from functools import lru_cache
from typing import List, Tuple

from src.transducers.models import Transducer, TransducerEdge, TransducerKind
from src.transducers.sequential import run_sequential_ep
from src.utils.errors import InvalidBlock
from src.words.models import Digit, EpWord, canonicalize

logger = logging.getLogger(__name__)

INITIAL, DEBT = 0, 1


@lru_cache(maxsize=16)
def build_quadratic_converter(a: int) -> Transducer:
    """
    Two state left sequential converter for the root of X^2 - aX - 1.

    Args:
        a: a >= 1

    Returns:
        Transducer over 2-digit blocks, states ``0`` and ``-1`` (the debt)
    """
    if a < 1:
        raise ValueError(f"a must be >= 1, got {a}")
    edges: List[TransducerEdge] = []
    for d in range(a + 1):
        edges.append(TransducerEdge(INITIAL, (d, 0), (d, 0), INITIAL))
    for c in range(a):
        for e in range(1, a + 1):
            edges.append(TransducerEdge(INITIAL, (c, e), (c + 1, a - e), DEBT))
    for e in range(1, a + 1):
        edges.append(TransducerEdge(DEBT, (e, 0), (e - 1, 0), INITIAL))
    edges.append(TransducerEdge(DEBT, (0, 0), (0, a), DEBT))
    for d in range(a + 1):
        for e in range(1, a + 1):
            edges.append(TransducerEdge(DEBT, (d, e), (d, a - e), DEBT))
    return Transducer(
        states=(INITIAL, DEBT),
        edges=tuple(edges),
        initial=frozenset({INITIAL}),
        finals=frozenset({INITIAL, DEBT}),
        kind=TransducerKind.LEFT_SEQUENTIAL,
        names={INITIAL: "0", DEBT: "-1"},
    )


def _check_admissible(word: EpWord, a: int) -> None:
    for i in range(word.m + word.p + 1):
        x = word.digit(i)
        if not 0 <= x <= a:
            raise InvalidBlock(f"digit {x} at position {i} is outside 0..{a}")
        if x == a and word.digit(i + 1) >= 1:
            raise InvalidBlock(f"forbidden factor {a}{word.digit(i + 1)} at position {i}")


def convert_quadratic(a: int, integer_digit: Digit, fraction: EpWord) -> Tuple[Digit, EpWord]:
    """
    Convert x_0.x_1x_2... in base beta into y_0.y_1y_2... in base -beta.

    Args:
        a: the coefficient in beta^2 = a beta + 1
        integer_digit: x_0
        fraction: x_1 x_2 ... as an eventually periodic word

    Returns:
        (y_0, y_1 y_2 ...) with the same value
    """
    word = EpWord((integer_digit,) + fraction.preperiod, fraction.period)
    _check_admissible(word, a)
    out = run_sequential_ep(build_quadratic_converter(a), word)
    return out.digit(0), canonicalize(out.shift(1))
