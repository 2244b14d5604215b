"""
Structured (pydantic / JSON) and DOT serialization of automata.
"""

import re
from typing import Dict, Iterator, List

from pydantic import BaseModel, Field

from src.automata.models import Automaton
from src.utils.errors import InvalidWord


class TransitionRecord(BaseModel):
    source: int = Field(..., description="Source state")
    label: int = Field(..., description="Digit read")
    target: int = Field(..., description="Target state")


class AutomatonDocument(BaseModel):
    """Serializable form of an Automaton"""
    states: List[int] = Field(..., description="State identifiers")
    alphabet: List[int] = Field(..., description="Digits, smallest first")
    initial: int = Field(..., description="Initial state")
    finals: List[int] = Field(default_factory=list, description="Final states")
    transitions: List[TransitionRecord] = Field(default_factory=list, description="Edges in (source, label) order")
    names: Dict[int, str] = Field(default_factory=dict, description="Optional display names")


def to_document(a: Automaton) -> AutomatonDocument:
    return AutomatonDocument(
        states=list(a.states),
        alphabet=list(a.alphabet),
        initial=a.initial,
        finals=sorted(a.finals),
        transitions=[TransitionRecord(source=s, label=d, target=t) for s, d, t in a.edges()],
        names=dict(a.names),
    )


def from_document(doc: AutomatonDocument) -> Automaton:
    return Automaton(
        states=tuple(doc.states),
        alphabet=tuple(doc.alphabet),
        transitions={(r.source, r.label): r.target for r in doc.transitions},
        initial=doc.initial,
        finals=frozenset(doc.finals),
        names=dict(doc.names),
    )


def gvquote(s: str) -> str:
    return '"{}"'.format(s.replace("\\", "\\\\").replace('"', r"\""))


def gvunquote(s: str) -> str:
    return s.replace(r"\"", '"').replace("\\\\", "\\")


def dot_header(kind: str, comment: str) -> Iterator[str]:
    yield f"digraph {kind} {{\n"
    yield "  rankdir=LR;\n"
    yield f"  comment={gvquote(comment)};\n"


def dot_states(states, initial: int, finals, name) -> Iterator[str]:
    yield '  "__start" [shape=point];\n'
    for q in states:
        shape = "doublecircle" if q in finals else "circle"
        yield f'  "{q}" [shape="{shape}", label={gvquote(name(q))}];\n'
    yield f'  "__start" -> "{initial}";\n'


def to_dot(a: Automaton) -> str:
    """DOT text; states are drawn with their display names and edges with their digit."""
    lines = list(dot_header("automaton", "alphabet: " + ",".join(str(d) for d in a.alphabet)))
    lines.extend(dot_states(a.states, a.initial, a.finals, a.name))
    for src, digit, dst in a.edges():
        lines.append(f'  "{src}" -> "{dst}" [label="{digit}"];\n')
    lines.append("}\n")
    return "".join(lines)


_COMMENT = re.compile(r'^\s*comment="(.*)";\s*$')
_NODE = re.compile(r'^\s*"(-?\d+)" \[shape="(\w+)", label="((?:[^"\\]|\\.)*)"\];\s*$')
_START = re.compile(r'^\s*"__start" -> "(-?\d+)";\s*$')
EDGE_LINE = re.compile(r'^\s*"(-?\d+)" -> "(-?\d+)" \[label="((?:[^"\\]|\\.)*)"\];\s*$')


def parse_dot_states(text: str):
    """(header comment, states, finals, names, initial) of a DOT document written by this module."""
    header, states, finals, names, initial = None, [], set(), {}, None
    for line in text.splitlines():
        if m := _COMMENT.match(line):
            header = m.group(1)
        elif m := _NODE.match(line):
            q = int(m.group(1))
            states.append(q)
            if m.group(2) == "doublecircle":
                finals.add(q)
            names[q] = gvunquote(m.group(3))
        elif m := _START.match(line):
            initial = int(m.group(1))
    if header is None or initial is None:
        raise InvalidWord("DOT text lacks the header comment or the start edge")
    return header, states, finals, names, initial


def from_dot(text: str) -> Automaton:
    header, states, finals, names, initial = parse_dot_states(text)
    alphabet = header.removeprefix("alphabet: ")
    transitions = {}
    for line in text.splitlines():
        if m := EDGE_LINE.match(line):
            transitions[(int(m.group(1)), int(gvunquote(m.group(3))))] = int(m.group(2))
    return Automaton(
        states=tuple(states),
        alphabet=tuple(int(d) for d in alphabet.split(",") if d != ""),
        transitions=transitions,
        initial=initial,
        finals=frozenset(finals),
        # display names equal to the identifier carry no information
        names={q: n for q, n in names.items() if n != str(q)},
    )
