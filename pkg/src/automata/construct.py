"""
Automata of subshifts defined by a reference word.

State i stands for having read s_1...s_i. Besides s_1...s_i itself, its
borders (suffixes that are also prefixes of s) are still tied with s, and a
digit is allowed only when no tied suffix falls on the wrong side of s.
Positions beyond the preperiod repeat with the period (twice the period when
it is odd and the order is alternate, since the parity of the position
matters), so states {0, ..., m + p - 1} or {0, ..., m + 2p - 1} suffice; the
edge leaving the last state goes to a state with the same right class.
"""

import logging
from collections import deque
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from src.automata.models import Automaton
from src.automata.ops import equivalence_classes, minimize, product
from src.expansion.negative import negative_alphabet, reference_words
from src.expansion.positive import d_star_beta_one, positive_alphabet
from src.numberfield.models import NumberField
from src.utils.decorators import log_io
from src.utils.errors import NotAsmax, NotAsmin
from src.words.models import Digit, EpWord, FiniteWord
from src.words.order import complement, is_asmax, is_asmin

logger = logging.getLogger(__name__)

TIE, DROP, FAIL = 0, 1, 2

# (position j of the tied suffix, 0-based; digit read; digit s_{j+1}) -> verdict
Verdict = Callable[[int, Digit, Digit], int]
Tied = FrozenSet[int]


def _alternate_min(j: int, a: Digit, s: Digit) -> int:
    if a == s:
        return TIE
    # the suffix falls below s when (-1)^(j+1) (a - s) < 0
    below = (a > s) if j % 2 == 0 else (a < s)
    return FAIL if below else DROP


def _lexicographic_max(j: int, a: Digit, s: Digit) -> int:
    if a == s:
        return TIE
    return FAIL if a > s else DROP


def failure_table(word: FiniteWord) -> List[int]:
    """table[i] = length of the longest proper border of word[:i]."""
    table = [0] * (len(word) + 1)
    k = 0
    for i in range(1, len(word)):
        while k and word[i] != word[k]:
            k = table[k]
        if word[i] == word[k]:
            k += 1
        table[i + 1] = k
    return table


def _tied_sets(word: FiniteWord) -> List[Tied]:
    """For each i <= len(word): {0, i} and every border length of word[:i]."""
    table = failure_table(word)
    sets = []
    for i in range(len(word) + 1):
        tied = {0}
        j = i
        while j:
            tied.add(j)
            j = table[j]
        sets.append(frozenset(tied))
    return sets


def _position_automaton(s: EpWord, alphabet: Sequence[Digit], verdict: Verdict, fold: int) -> Automaton:
    size = s.m + fold

    def reduce(j: int) -> int:
        return j if j < size else s.m + (j - s.m) % fold

    def step(tied: Tied, a: Digit) -> Optional[Tied]:
        following = {0}
        for j in tied:
            v = verdict(j, a, s.digit(j))
            if v == FAIL:
                return None
            if v == TIE:
                following.add(reduce(j + 1))
        return frozenset(following)

    positions = _tied_sets(s.prefix(size))[:size]

    # every tied set reachable from a position, to decide right classes
    index: Dict[Tied, int] = {}
    moves: Dict[Tuple[int, Digit], int] = {}
    queue = deque()
    for tied in positions:
        if tied not in index:
            index[tied] = len(index)
            queue.append(tied)
    while queue:
        tied = queue.popleft()
        for a in alphabet:
            target = step(tied, a)
            if target is None:
                continue
            if target not in index:
                index[target] = len(index)
                queue.append(target)
            moves[(index[tied], a)] = index[target]
    closure = Automaton(tuple(range(len(index))), tuple(alphabet), moves, 0, frozenset(range(len(index))))
    block = equivalence_classes(closure)

    states: Dict[Tied, int] = {tied: i for i, tied in enumerate(positions)}
    names = {i: str(i) for i in range(size)}
    by_class: Dict[int, int] = {}
    for i in [s.m, *range(size)]:
        by_class.setdefault(block[index[positions[i]]], i)

    def resolve(tied: Tied) -> int:
        if tied in states:
            return states[tied]
        c = block[index[tied]]
        if c not in by_class:
            by_class[c] = states[tied] = len(states)
            names[by_class[c]] = str(max(tied))
            pending.append(tied)
        return by_class[c]

    transitions = {}
    pending = deque(positions)
    while pending:
        tied = pending.popleft()
        for a in alphabet:
            target = step(tied, a)
            if target is not None:
                transitions[(states[tied], a)] = resolve(target)
    if len(states) > size:
        logger.debug(f"{s}: {len(states) - size} states beyond the {size} positions")
    all_states = tuple(range(len(states)))
    return Automaton(all_states, tuple(alphabet), transitions, 0, frozenset(all_states), names)


def build_asmin_automaton(s: EpWord, alphabet: Sequence[Digit]) -> Automaton:
    """
    Automaton of the factors of {w : s <=_alt every suffix of w}.

    Args:
        s: alternately shift minimal word whose first digit is max(alphabet)
        alphabet: digits, smallest first

    Returns:
        Deterministic automaton with m + p states (p even) or m + 2p states
        (p odd), every state final, state 0 initial
    """
    alphabet = tuple(alphabet)
    if not is_asmin(s, max(alphabet)):
        raise NotAsmin(f"{s} is not alternately shift minimal over {alphabet}")
    fold = s.p if s.p % 2 == 0 else 2 * s.p
    a = _position_automaton(s, alphabet, _alternate_min, fold)
    logger.debug(f"asmin automaton of {s}: {len(a)} states")
    return a


def _relabel(a: Automaton, mapping: Dict[Digit, Digit]) -> Automaton:
    return Automaton(
        a.states,
        tuple(sorted(mapping[d] for d in a.alphabet)),
        {(q, mapping[d]): t for (q, d), t in a.transitions.items()},
        a.initial,
        a.finals,
        dict(a.names),
    )


def build_asmax_automaton(s: EpWord, alphabet: Sequence[Digit]) -> Automaton:
    """Automaton of the factors of {w : every suffix of w <=_alt s}, s alternately shift maximal."""
    alphabet = tuple(alphabet)
    lo, hi = min(alphabet), max(alphabet)
    if not is_asmax(s, lo, hi):
        raise NotAsmax(f"{s} is not alternately shift maximal over {alphabet}")
    flipped = build_asmin_automaton(complement(s, lo, hi), alphabet)
    return _relabel(flipped, {d: lo + hi - d for d in alphabet})


@lru_cache(maxsize=32)
@log_io
def build_shift_automaton(f: NumberField, cap: Optional[int] = None) -> Automaton:
    """
    Minimal automaton of the factors of the (-beta)-shift.

    When d_{-beta}(-beta/(beta+1)) is purely periodic with odd period the
    shift is the intersection of S(d) and S'(d*); otherwise it is S(d).
    """
    d, star = reference_words(f, cap)
    alphabet = tuple(negative_alphabet(f))
    automaton = build_asmin_automaton(d, alphabet)
    if d.is_purely_periodic and d.p % 2 == 1:
        automaton = product(automaton, build_asmax_automaton(star, alphabet))
    result = minimize(automaton)
    logger.info(f"(-beta)-shift automaton for {f.min_poly}: {len(result)} states")
    return result


@lru_cache(maxsize=32)
def beta_shift_automaton(f: NumberField, cap: Optional[int] = None) -> Automaton:
    """Minimal automaton of the factors of the beta-shift (Parry's condition on d*_beta(1))."""
    star = d_star_beta_one(f, cap)
    a = _position_automaton(star, tuple(positive_alphabet(f)), _lexicographic_max, star.p)
    return minimize(a)
