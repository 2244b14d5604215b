"""
Right sequential conversion of natural numbers from base b to base -b.

Blocks of two digits are read least significant first. State 1 carries one
unit into the next block: a block ``hi lo`` worth hi*b + lo in base b is worth
lo - hi*b in base -b, so a nonzero ``hi`` leaves a deficit of b^2 that the next
block repays.
"""

import logging
from functools import lru_cache
from typing import List

from src.expansion.integer import int_to_base
from src.transducers.models import Transducer, TransducerEdge, TransducerKind
from src.transducers.sequential import run_sequential
from src.words.models import FiniteWord

logger = logging.getLogger(__name__)


@lru_cache(maxsize=16)
def build_int_converter(b: int) -> Transducer:
    """
    The two state right sequential transducer from base b to base -b.

    Args:
        b: base, b >= 2

    Returns:
        Transducer over 2-digit blocks; state 1 emits a final ``1``
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    edges: List[TransducerEdge] = []
    for c in range(b):
        edges.append(TransducerEdge(0, (0, c), (0, c), 0))
    for d in range(1, b):
        for c in range(b):
            edges.append(TransducerEdge(0, (d, c), (b - d, c), 1))
    for e in range(b - 1):
        edges.append(TransducerEdge(1, (0, e), (0, e + 1), 0))
        for d in range(1, b):
            edges.append(TransducerEdge(1, (d, e), (b - d, e + 1), 1))
    for d in range(b):
        edges.append(TransducerEdge(1, (d, b - 1), (b - d - 1, 0), 1))
    return Transducer(
        states=(0, 1),
        edges=tuple(edges),
        initial=frozenset({0}),
        finals=frozenset({0, 1}),
        kind=TransducerKind.RIGHT_SEQUENTIAL,
        final_outputs={1: (1,)},
    )


def strip_zeros(word: FiniteWord) -> FiniteWord:
    i = 0
    while i < len(word) - 1 and word[i] == 0:
        i += 1
    return word[i:] if word else (0,)


def convert_int(n: int, b: int) -> FiniteWord:
    """<n>_{-b} computed by the transducer from the base b digits of n >= 0."""
    return strip_zeros(run_sequential(build_int_converter(b), int_to_base(n, b)))
