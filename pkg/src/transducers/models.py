"""
Transducer models: letter-to-letter and block machines over digit alphabets.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from src.numberfield.models import FieldElement
from src.words.models import FiniteWord


class TransducerKind(str, Enum):
    GENERAL = "general"
    RIGHT_SEQUENTIAL = "right-sequential"
    LEFT_SEQUENTIAL = "left-sequential"
    ONLINE = "on-line"


@dataclass(frozen=True)
class TransducerEdge:
    source: int
    input: FiniteWord
    output: FiniteWord
    target: int


@dataclass(frozen=True)
class OnlineState:
    """
    Remainder of the on-line algorithm.

    ``value`` is q * beta^delta, which lies in Z[beta]; ``phase`` is the parity
    of j for q_{delta+j} (0 for transient states).
    """

    value: FieldElement
    phase: int = 0


@dataclass(frozen=True, eq=False)
class Transducer:
    """
    Finite transducer with integer states.

    Sequential and on-line machines are deterministic on their input: at most
    one edge leaves a state per input block.
    """

    states: Tuple[int, ...]
    edges: Tuple[TransducerEdge, ...]
    initial: FrozenSet[int]
    finals: FrozenSet[int]
    kind: TransducerKind = TransducerKind.GENERAL
    delay: int = 0
    transient: FrozenSet[int] = frozenset()
    # exact payload of a state: a FieldElement, an OnlineState or a tuple of both kinds
    payloads: Dict[int, Any] = field(default_factory=dict)
    final_outputs: Dict[int, FiniteWord] = field(default_factory=dict)
    names: Dict[int, str] = field(default_factory=dict)
    _index: Dict[Tuple[int, FiniteWord], List[TransducerEdge]] = field(
        default_factory=dict, init=False, repr=False
    )
    _outgoing: Dict[int, List[TransducerEdge]] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        known = set(self.states)
        if not self.initial <= known or not self.finals <= known or not self.transient <= known:
            raise ValueError("initial, final and transient states must be states")
        for e in self.edges:
            if e.source not in known or e.target not in known:
                raise ValueError(f"edge {e} references an unknown state")
            self._index.setdefault((e.source, e.input), []).append(e)
            self._outgoing.setdefault(e.source, []).append(e)
        if self.kind != TransducerKind.GENERAL:
            if len(self.initial) != 1:
                raise ValueError(f"a {self.kind.value} transducer has exactly one initial state")
            for (q, block), found in self._index.items():
                if len(found) > 1:
                    raise ValueError(f"state {q} has {len(found)} edges reading {block}")

    @property
    def start(self) -> int:
        return min(self.initial)

    @property
    def synchronous(self) -> FrozenSet[int]:
        return frozenset(self.states) - self.transient

    @property
    def block_size(self) -> Optional[int]:
        sizes = {len(e.input) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def edges_from(self, state: int, block: FiniteWord) -> List[TransducerEdge]:
        return self._index.get((state, tuple(block)), [])

    def edge(self, state: int, block: FiniteWord) -> Optional[TransducerEdge]:
        found = self.edges_from(state, block)
        return found[0] if found else None

    def out_edges(self, state: int) -> List[TransducerEdge]:
        return self._outgoing.get(state, [])

    def name(self, state: int) -> str:
        return self.names.get(state, str(state))

    def __len__(self) -> int:
        return len(self.states)

    def __repr__(self) -> str:
        return f"Transducer(kind={self.kind.value}, states={len(self.states)}, edges={len(self.edges)})"
