"""
Running sequential transducers on finite and eventually periodic words.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from src.transducers.models import Transducer, TransducerKind
from src.utils.errors import NoRun
from src.words.models import Digit, EpWord, FiniteWord, canonicalize

logger = logging.getLogger(__name__)


def _blocks(word: Sequence[Digit], size: int, pad_left: bool) -> List[FiniteWord]:
    word = tuple(word)
    missing = -len(word) % size
    word = (0,) * missing + word if pad_left else word + (0,) * missing
    return [word[i : i + size] for i in range(0, len(word), size)]


def _step(t: Transducer, state: int, block: FiniteWord):
    e = t.edge(state, block)
    if e is None:
        raise NoRun(f"no edge reads {block} from state {t.name(state)}", state=state, block=block)
    return e


def run_sequential(t: Transducer, word: Sequence[Digit]) -> FiniteWord:
    """
    Run a sequential transducer over a finite word, most significant digit first.

    A right sequential machine pads the word with leading zeros to a whole
    number of blocks and reads the blocks from right to left; a left
    sequential machine pads with trailing zeros and reads left to right. The
    final output of the last state is attached on the side reading ends.

    Args:
        t: a RIGHT_SEQUENTIAL or LEFT_SEQUENTIAL transducer with uniform block size
        word: input digits

    Returns:
        Output digits, most significant first
    """
    if t.kind not in (TransducerKind.RIGHT_SEQUENTIAL, TransducerKind.LEFT_SEQUENTIAL):
        raise ValueError(f"run_sequential needs a sequential transducer, got {t.kind.value}")
    size = t.block_size or 1
    right = t.kind == TransducerKind.RIGHT_SEQUENTIAL
    blocks = _blocks(word, size, pad_left=right)
    state = t.start
    pieces: List[FiniteWord] = []
    for block in reversed(blocks) if right else blocks:
        e = _step(t, state, block)
        pieces.append(e.output)
        state = e.target
    pieces.append(t.final_outputs.get(state, ()))
    if right:
        pieces.reverse()
    return tuple(d for piece in pieces for d in piece)


def run_sequential_ep(t: Transducer, word: EpWord) -> EpWord:
    """
    Run a left sequential transducer over an infinite eventually periodic word.

    The run is unrolled block by block until the pair (state, position in
    the period) repeats; the output between the two visits is the period.
    """
    if t.kind != TransducerKind.LEFT_SEQUENTIAL:
        raise ValueError("only left sequential machines read infinite words")
    size = t.block_size or 1
    seen: Dict[Tuple[int, int], int] = {}
    output: List[Digit] = []
    state, pos = t.start, 0
    while True:
        phase = pos if pos < word.m else word.m + (pos - word.m) % word.p
        if (state, phase) in seen:
            break
        seen[(state, phase)] = len(output)
        e = _step(t, state, tuple(word.digit(pos + i) for i in range(size)))
        output.extend(e.output)
        state, pos = e.target, pos + size
    start = seen[(state, phase)]
    logger.debug(f"sequential run repeats after {pos} digits")
    return canonicalize(EpWord(tuple(output[:start]), tuple(output[start:])))
