"""
Automaton and classification models.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterator, Mapping, Optional, Tuple

from src.words.models import Digit, FiniteWord

Transitions = Mapping[Tuple[int, Digit], int]


@dataclass(frozen=True, eq=False)
class Automaton:
    """
    Deterministic automaton over a digit alphabet.

    States are the integers ``states``; ``transitions`` is partial.
    """

    states: Tuple[int, ...]
    alphabet: Tuple[Digit, ...]
    transitions: Dict[Tuple[int, Digit], int]
    initial: int
    finals: FrozenSet[int]
    names: Dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        known = set(self.states)
        if self.initial not in known:
            raise ValueError(f"initial state {self.initial} is not a state")
        for (src, digit), dst in self.transitions.items():
            if src not in known or dst not in known:
                raise ValueError(f"transition {src} -{digit}-> {dst} references an unknown state")
            if digit not in self.alphabet:
                raise ValueError(f"label {digit} outside the alphabet")
        if not self.finals <= known:
            raise ValueError("final states must be states")

    def step(self, state: int, digit: Digit) -> Optional[int]:
        return self.transitions.get((state, digit))

    def successors(self, state: int) -> Dict[Digit, int]:
        return {a: self.transitions[(state, a)] for a in self.alphabet if (state, a) in self.transitions}

    def edges(self) -> Iterator[Tuple[int, Digit, int]]:
        for (src, digit), dst in sorted(self.transitions.items()):
            yield src, digit, dst

    def name(self, state: int) -> str:
        return self.names.get(state, str(state))

    def __len__(self) -> int:
        return len(self.states)

    def __repr__(self) -> str:
        return f"Automaton(states={len(self.states)}, alphabet={self.alphabet}, edges={len(self.transitions)})"


class ShiftKind(str, Enum):
    FINITE_TYPE = "finite-type"
    SOFIC_NOT_FINITE_TYPE = "sofic"
    NOT_SOFIC_OR_UNDETECTED = "undetected"


@dataclass(frozen=True)
class Classification:
    kind: ShiftKind
    forbidden_factors: Optional[FrozenSet[FiniteWord]]
    shift_automaton: Optional[Automaton]
