"""
Structured and DOT serialization of transducers, edge labels written ``in|out``.
"""

from typing import Dict, List

from pydantic import BaseModel, Field

from src.automata.export import EDGE_LINE, dot_header, dot_states, gvquote, gvunquote, parse_dot_states
from src.transducers.models import Transducer, TransducerEdge, TransducerKind
from src.utils.errors import InvalidWord
from src.words.models import FiniteWord

EMPTY = "ε"


class EdgeRecord(BaseModel):
    source: int = Field(..., description="Source state")
    input: List[int] = Field(default_factory=list, description="Digits read")
    output: List[int] = Field(default_factory=list, description="Digits written")
    target: int = Field(..., description="Target state")


class TransducerDocument(BaseModel):
    """Serializable form of a Transducer (state payloads are kept only through names)"""
    kind: TransducerKind = Field(TransducerKind.GENERAL, description="Reading discipline")
    states: List[int] = Field(..., description="State identifiers")
    initial: List[int] = Field(..., description="Initial states")
    finals: List[int] = Field(default_factory=list, description="Final states")
    delay: int = Field(0, description="On-line delay")
    transient: List[int] = Field(default_factory=list, description="Transient states of an on-line machine")
    edges: List[EdgeRecord] = Field(default_factory=list, description="Edges in construction order")
    final_outputs: Dict[int, List[int]] = Field(default_factory=dict, description="Output emitted when a run ends")
    names: Dict[int, str] = Field(default_factory=dict, description="Optional display names")


def to_document(t: Transducer) -> TransducerDocument:
    return TransducerDocument(
        kind=t.kind,
        states=list(t.states),
        initial=sorted(t.initial),
        finals=sorted(t.finals),
        delay=t.delay,
        transient=sorted(t.transient),
        edges=[
            EdgeRecord(source=e.source, input=list(e.input), output=list(e.output), target=e.target)
            for e in t.edges
        ],
        final_outputs={q: list(w) for q, w in t.final_outputs.items()},
        names=dict(t.names),
    )


def from_document(doc: TransducerDocument) -> Transducer:
    return Transducer(
        states=tuple(doc.states),
        edges=tuple(TransducerEdge(r.source, tuple(r.input), tuple(r.output), r.target) for r in doc.edges),
        initial=frozenset(doc.initial),
        finals=frozenset(doc.finals),
        kind=doc.kind,
        delay=doc.delay,
        transient=frozenset(doc.transient),
        final_outputs={q: tuple(w) for q, w in doc.final_outputs.items()},
        names=dict(doc.names),
    )


def _label(word: FiniteWord) -> str:
    return ",".join(str(d) for d in word) if word else EMPTY


def _unlabel(text: str) -> FiniteWord:
    if text == EMPTY:
        return ()
    try:
        return tuple(int(d) for d in text.split(","))
    except ValueError:
        raise InvalidWord(f"bad edge label {text!r}") from None


def to_dot(t: Transducer) -> str:
    """DOT text for a transducer with a single initial state."""
    lines = list(dot_header("transducer", f"kind: {t.kind.value}; delay: {t.delay}"))
    lines.extend(dot_states(t.states, t.start, t.finals, t.name))
    for e in t.edges:
        label = f"{_label(e.input)}|{_label(e.output)}"
        lines.append(f'  "{e.source}" -> "{e.target}" [label={gvquote(label)}];\n')
    for q, word in sorted(t.final_outputs.items()):
        lines.append(f"  // final {q} {_label(word)}\n")
    lines.append("}\n")
    return "".join(lines)


def from_dot(text: str) -> Transducer:
    header, states, finals, names, initial = parse_dot_states(text)
    try:
        kind_part, delay_part = header.split("; ")
        kind = TransducerKind(kind_part.removeprefix("kind: "))
        delay = int(delay_part.removeprefix("delay: "))
    except ValueError:
        raise InvalidWord(f"bad transducer header {header!r}") from None
    edges = []
    final_outputs = {}
    for line in text.splitlines():
        if m := EDGE_LINE.match(line):
            read, _, written = gvunquote(m.group(3)).partition("|")
            edges.append(TransducerEdge(int(m.group(1)), _unlabel(read), _unlabel(written), int(m.group(2))))
        elif line.strip().startswith("// final "):
            _, _, q, word = line.split(maxsplit=3)
            final_outputs[int(q)] = _unlabel(word)
    return Transducer(
        states=tuple(states),
        edges=tuple(edges),
        initial=frozenset({initial}),
        finals=frozenset(finals),
        kind=kind,
        delay=delay,
        final_outputs=final_outputs,
        names={q: n for q, n in names.items() if n != str(q)},
    )
