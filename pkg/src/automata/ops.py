"""
Standard constructions on deterministic automata: membership, trimming,
minimization, intersection, cover extraction and isomorphism.

Graph questions (reachability, strongly connected components, isomorphism)
are answered on a ``networkx.MultiDiGraph`` whose edges carry a ``label``.
"""

import itertools
import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx
from networkx.algorithms import isomorphism

from src.automata.models import Automaton
from src.utils.errors import EmptyAutomaton
from src.words.models import Digit, FiniteWord

logger = logging.getLogger(__name__)


def to_graph(a: Automaton) -> nx.MultiDiGraph:
    g = nx.MultiDiGraph()
    for q in a.states:
        g.add_node(q, initial=(q == a.initial), final=(q in a.finals))
    for src, digit, dst in a.edges():
        g.add_edge(src, dst, label=digit)
    return g


def run(a: Automaton, word: Iterable[Digit], state: Optional[int] = None) -> Optional[int]:
    """State reached from ``state`` (default: initial) after reading word, or None."""
    q = a.initial if state is None else state
    for digit in word:
        q = a.transitions.get((q, digit))
        if q is None:
            return None
    return q


def accepts(a: Automaton, word: Iterable[Digit]) -> bool:
    q = run(a, word)
    return q is not None and q in a.finals


def language(a: Automaton, max_length: int) -> Set[FiniteWord]:
    """All accepted words of length <= max_length."""
    words: Set[FiniteWord] = set()
    frontier: List[Tuple[FiniteWord, int]] = [((), a.initial)]
    for length in range(max_length + 1):
        following = []
        for word, q in frontier:
            if q in a.finals:
                words.add(word)
            if length < max_length:
                for digit, nxt in a.successors(q).items():
                    following.append((word + (digit,), nxt))
        frontier = following
    return words


def renumber(a: Automaton, keep: Optional[Iterable[int]] = None) -> Automaton:
    """Restrict to ``keep`` and number states 0, 1, ... in breadth-first order from the initial state."""
    allowed = set(a.states if keep is None else keep)
    if a.initial not in allowed:
        raise EmptyAutomaton("the initial state was removed")
    order = {a.initial: 0}
    queue = deque([a.initial])
    while queue:
        q = queue.popleft()
        for _, nxt in sorted(a.successors(q).items()):
            if nxt in allowed and nxt not in order:
                order[nxt] = len(order)
                queue.append(nxt)
    # states unreachable from the initial one keep a stable order after the reachable ones
    for q in sorted(allowed - set(order)):
        order[q] = len(order)
    transitions = {
        (order[src], digit): order[dst]
        for (src, digit), dst in a.transitions.items()
        if src in order and dst in order
    }
    return Automaton(
        states=tuple(range(len(order))),
        alphabet=a.alphabet,
        transitions=transitions,
        initial=0,
        finals=frozenset(order[q] for q in a.finals if q in order),
        names={order[q]: name for q, name in a.names.items() if q in order},
    )


def trim(a: Automaton) -> Automaton:
    """Keep the states that are accessible from the initial state and co-accessible to a final one."""
    g = to_graph(a)
    accessible = nx.descendants(g, a.initial) | {a.initial}
    coaccessible: Set[int] = set()
    for q in a.finals:
        coaccessible |= nx.ancestors(g, q) | {q}
    useful = accessible & coaccessible
    if not useful:
        raise EmptyAutomaton("automaton recognizes the empty language")
    if a.initial not in useful:
        raise EmptyAutomaton("initial state is not co-accessible")
    return renumber(a, useful)


def equivalence_classes(a: Automaton) -> Dict[int, int]:
    """Moore partition refinement on the completion of a; returns state -> block."""
    sink = -1
    states = list(a.states) + [sink]

    def target(q: int, digit: Digit) -> int:
        return sink if q == sink else a.transitions.get((q, digit), sink)

    block = {q: int(q in a.finals) for q in states}
    while True:
        signatures = {q: (block[q],) + tuple(block[target(q, d)] for d in a.alphabet) for q in states}
        numbering: Dict[tuple, int] = {}
        refined = {q: numbering.setdefault(signatures[q], len(numbering)) for q in states}
        if len(numbering) == len(set(block.values())):
            return refined
        block = refined


def minimize(a: Automaton) -> Automaton:
    """The minimal deterministic automaton of the language of a (trimmed, canonically numbered)."""
    a = trim(a)
    block = equivalence_classes(a)
    sink_block = block[-1]
    representatives: Dict[int, int] = {}
    for q in a.states:
        representatives.setdefault(block[q], q)
    transitions = {}
    for (src, digit), dst in a.transitions.items():
        if block[dst] != sink_block:
            transitions[(block[src], digit)] = block[dst]
    merged = Automaton(
        states=tuple(sorted(set(block[q] for q in a.states))),
        alphabet=a.alphabet,
        transitions=transitions,
        initial=block[a.initial],
        finals=frozenset(block[q] for q in a.finals),
    )
    result = renumber(merged)
    logger.debug(f"minimized {len(a)} states to {len(result)}")
    return result


def product(a: Automaton, b: Automaton) -> Automaton:
    """Accessible product recognizing the intersection of both languages."""
    alphabet = tuple(d for d in a.alphabet if d in set(b.alphabet))
    start = (a.initial, b.initial)
    index = {start: 0}
    queue = deque([start])
    transitions = {}
    while queue:
        p, q = queue.popleft()
        for digit in alphabet:
            np_, nq = a.step(p, digit), b.step(q, digit)
            if np_ is None or nq is None:
                continue
            if (np_, nq) not in index:
                index[(np_, nq)] = len(index)
                queue.append((np_, nq))
            transitions[(index[(p, q)], digit)] = index[(np_, nq)]
    finals = frozenset(i for (p, q), i in index.items() if p in a.finals and q in b.finals)
    return Automaton(
        states=tuple(range(len(index))),
        alphabet=alphabet,
        transitions=transitions,
        initial=0,
        finals=finals,
        names={i: f"({a.name(p)},{b.name(q)})" for (p, q), i in index.items()},
    )


def full_automaton(alphabet: Sequence[Digit]) -> Automaton:
    """One state, every digit loops: the full shift."""
    return Automaton((0,), tuple(alphabet), {(0, d): 0 for d in alphabet}, 0, frozenset({0}))


def cover(a: Automaton) -> Automaton:
    """
    Terminal irreducible part of an automaton.

    Keeps the bottom strongly connected components carrying at least one
    edge; the smallest kept state becomes the initial state and every kept
    state is final.
    """
    g = to_graph(a)
    condensed = nx.condensation(g)
    keep: Set[int] = set()
    for node in condensed.nodes:
        members = condensed.nodes[node]["members"]
        if condensed.out_degree(node) != 0:
            continue
        sub = g.subgraph(members)
        if sub.number_of_edges() > 0:
            keep |= set(members)
    if not keep:
        raise EmptyAutomaton("no terminal component with edges")
    start = min(keep)
    restricted = Automaton(
        states=tuple(sorted(keep)),
        alphabet=a.alphabet,
        transitions={k: v for k, v in a.transitions.items() if k[0] in keep and v in keep},
        initial=start,
        finals=frozenset(keep),
    )
    return renumber(restricted)


def is_isomorphic(a: Automaton, b: Automaton, respect_initial: bool = True) -> bool:
    """Labeled-graph isomorphism (final flags always matched, the initial flag optionally)."""
    if len(a) != len(b) or len(a.transitions) != len(b.transitions):
        return False
    node_attrs = ["final", "initial"] if respect_initial else ["final"]
    node_match = isomorphism.categorical_node_match(node_attrs, [False] * len(node_attrs))
    edge_match = isomorphism.categorical_multiedge_match("label", None)
    return nx.is_isomorphic(to_graph(a), to_graph(b), node_match=node_match, edge_match=edge_match)


def words(alphabet: Sequence[Digit], max_length: int) -> Iterator[FiniteWord]:
    for n in range(max_length + 1):
        yield from itertools.product(alphabet, repeat=n)


def nontrivial_components(a: Automaton) -> List[FrozenSet[int]]:
    """Strongly connected components that carry at least one edge."""
    g = to_graph(a)
    components = []
    for members in nx.strongly_connected_components(g):
        if g.subgraph(members).number_of_edges() > 0:
            components.append(frozenset(members))
    return components
