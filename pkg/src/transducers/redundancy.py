"""
Redundancy and normalization transducers in base -beta and base beta.

The redundancy transducer reads pairs a|b of digits in {-c, ..., c}. Its
state after u_1...u_n | v_1...v_n is s = sum (u_j - v_j) b^(n-j) with
b = -beta (or beta), so two infinite words have the same value exactly when
the run stays bounded. The bounds |s| <= 2c/(beta-1) and, at each conjugate
inside the unit disc, |s(beta_i)| <= 2c/(1-|beta_i|) leave finitely many
states when beta is a Pisot number.

Normalization keeps the outputs read by the shift automaton and walks the
lexicographically greatest run on the input.
"""

import logging
from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx

from src.automata.construct import beta_shift_automaton, build_shift_automaton
from src.automata.models import Automaton
from src.config import get_settings
from src.expansion.negative import in_interval, orbit_expansion
from src.expansion.orbit import resolve_cap
from src.expansion.positive import beta_orbit_expansion
from src.numberfield.field import conjugate_abs_bounds, conjugate_boxes, eval_box, modulus_squared_range
from src.numberfield.intervals import floor_of, sign
from src.numberfield.models import Box, FieldElement, NumberField
from src.transducers.models import Transducer, TransducerEdge, TransducerKind
from src.utils.decorators import log_io
from src.utils.errors import CapExceeded, InvalidWord, StateCapExceeded, TransducerError, ValueOutOfInterval
from src.words.evaluate import eval_ep
from src.words.models import Digit, EpWord, FiniteWord, canonicalize

logger = logging.getLogger(__name__)

Configuration = Tuple[int, int]
CONJUGATE_EPS = Fraction(1, 10 ** 6)


def _resolve_state_cap(state_cap: Optional[int]) -> int:
    return state_cap if state_cap is not None else get_settings().transducers.state_cap


def _conjugate_limits(f: NumberField, c: int) -> List[Tuple[Box, Fraction]]:
    """Boxes of the contracting conjugates with an upper bound on (2c/(1-|beta_i|))^2."""
    eps = CONJUGATE_EPS
    limits = []
    for box, modulus in zip(conjugate_boxes(f, eps / 4), conjugate_abs_bounds(f, eps)):
        if modulus < 1:
            limits.append((box, (2 * c / (1 - modulus)) ** 2))
    return limits


def _bounded(s: FieldElement, real_bound: FieldElement, conjugate_limits: List[Tuple[Box, Fraction]]) -> bool:
    if sign(real_bound - s) < 0 or sign(real_bound + s) < 0:
        return False
    # drop a state only when its enclosure lies outside the bound
    for box, limit in conjugate_limits:
        low, _ = modulus_squared_range(eval_box(s, box))
        if low > limit:
            return False
    return True


def _redundancy(f: NumberField, c: int, base_sign: int, state_cap: Optional[int]) -> Transducer:
    beta = f.beta()
    if c < floor_of(beta):
        raise ValueError(f"alphabet bound {c} is below floor(beta)")
    cap = _resolve_state_cap(state_cap)
    base = beta * base_sign
    real_bound = 2 * c / (beta - 1)
    conjugate_limits = _conjugate_limits(f, c)
    index: Dict[FieldElement, int] = {f.zero(): 0}
    queue = deque([f.zero()])
    edges: List[TransducerEdge] = []
    while queue:
        s = queue.popleft()
        q = index[s]
        targets: Dict[int, int] = {}
        for e in range(-2 * c, 2 * c + 1):
            t = base * s + e
            if t not in index:
                if not _bounded(t, real_bound, conjugate_limits):
                    continue
                if len(index) >= cap:
                    logger.warning(f"redundancy transducer exceeds {cap} states")
                    raise StateCapExceeded(f"more than {cap} states", count=len(index) + 1)
                index[t] = len(index)
                queue.append(t)
            targets[e] = index[t]
        for a in range(-c, c + 1):
            for b in range(-c, c + 1):
                if a - b in targets:
                    edges.append(TransducerEdge(q, (a,), (b,), targets[a - b]))
    states = tuple(range(len(index)))
    logger.info(f"redundancy transducer for {f.min_poly}, c={c}, sign {base_sign:+d}: {len(states)} states")
    return Transducer(
        states=states,
        edges=tuple(edges),
        initial=frozenset({0}),
        finals=frozenset(states),
        payloads={q: s for s, q in index.items()},
        names={q: str(s) for s, q in index.items()},
    )


@lru_cache(maxsize=16)
@log_io
def build_redundancy_transducer(f: NumberField, c: int, state_cap: Optional[int] = None) -> Transducer:
    """
    Letter-to-letter transducer accepting the pairs of equal value in base -beta.

    Args:
        f: field of a Pisot number beta
        c: alphabet bound, c >= floor(beta); digits range over {-c, ..., c}
        state_cap: maximal number of states; the configured state_cap when None

    Returns:
        General transducer, state 0 initial, every state final
    """
    return _redundancy(f, c, -1, state_cap)


@lru_cache(maxsize=16)
@log_io
def build_pos_redundancy_transducer(f: NumberField, c: int, state_cap: Optional[int] = None) -> Transducer:
    """The same construction in base beta (s' = beta s + e)."""
    return _redundancy(f, c, 1, state_cap)


def accepts_pair(t: Transducer, u: Sequence[Digit], v: Sequence[Digit]) -> bool:
    """True when some run of t reads u and writes v letter by letter."""
    if len(u) != len(v):
        return False
    current: Set[int] = set(t.initial)
    for a, b in zip(u, v):
        current = {e.target for q in current for e in t.edges_from(q, (a,)) if e.output == (b,)}
        if not current:
            return False
    return bool(current & t.finals)


def _restrict(r: Transducer, a: Automaton, outputs: Sequence[Digit]) -> Transducer:
    """Product of r with a read on the output tape."""
    allowed = set(outputs)
    start = (r.start, a.initial)
    index: Dict[Tuple[int, int], int] = {start: 0}
    queue = deque([start])
    edges: List[TransducerEdge] = []
    while queue:
        pair = queue.popleft()
        s, q = pair
        for e in r.out_edges(s):
            b = e.output[0]
            if b not in allowed:
                continue
            nxt = a.step(q, b)
            if nxt is None:
                continue
            target = (e.target, nxt)
            if target not in index:
                index[target] = len(index)
                queue.append(target)
            edges.append(TransducerEdge(index[pair], e.input, e.output, index[target]))
    states = tuple(range(len(index)))
    return Transducer(
        states=states,
        edges=tuple(edges),
        initial=frozenset({0}),
        finals=frozenset(states),
        payloads={i: (r.payloads[s], q) for (s, q), i in index.items()},
        names={i: f"({r.name(s)},{q})" for (s, q), i in index.items()},
    )


@lru_cache(maxsize=16)
@log_io
def build_normalization_transducer(
    f: NumberField,
    c: int,
    state_cap: Optional[int] = None,
    output_alphabet: Optional[Tuple[Digit, ...]] = None,
) -> Transducer:
    """
    Normalization in base -beta on {-c, ..., c}.

    Args:
        f: field of a Pisot number beta
        c: input alphabet bound, c >= floor(beta)
        state_cap: maximal number of states of the redundancy transducer
        output_alphabet: restrict the output digits further, e.g. to
            {0, ..., b-1} for an integer base b

    Returns:
        The redundancy transducer whose outputs are read by the (-beta)-shift automaton
    """
    a = build_shift_automaton(f)
    t = _restrict(build_redundancy_transducer(f, c, state_cap), a, output_alphabet or a.alphabet)
    logger.info(f"normalization transducer for {f.min_poly}, c={c}: {len(t)} states")
    return t


@lru_cache(maxsize=16)
@log_io
def build_pos_normalization_transducer(f: NumberField, c: int, state_cap: Optional[int] = None) -> Transducer:
    """Normalization in base beta: positive redundancy transducer with outputs read by the beta-shift automaton."""
    a = beta_shift_automaton(f)
    return _restrict(build_pos_redundancy_transducer(f, c, state_cap), a, a.alphabet)


def _phase(w: EpWord, i: int) -> int:
    return i if i < w.m else w.m + (i - w.m) % w.p


def _configurations(t: Transducer, w: EpWord) -> Dict[Configuration, List[Tuple[Digit, Configuration]]]:
    start = (t.start, 0)
    successors: Dict[Configuration, List[Tuple[Digit, Configuration]]] = {}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        if node in successors:
            continue
        q, i = node
        following = [(e.output[0], (e.target, _phase(w, i + 1))) for e in t.edges_from(q, (w.digit(i),))]
        successors[node] = following
        queue.extend(n for _, n in following if n not in successors)
    return successors


def _live(successors: Dict[Configuration, List[Tuple[Digit, Configuration]]]) -> Set[Configuration]:
    """Configurations from which an infinite run starts."""
    g = nx.DiGraph()
    g.add_nodes_from(successors)
    g.add_edges_from((node, n) for node, following in successors.items() for _, n in following)
    live: Set[Configuration] = set()
    for component in nx.strongly_connected_components(g):
        node = next(iter(component))
        if len(component) > 1 or g.has_edge(node, node):
            live |= component
    stack = list(live)
    while stack:
        for pred in g.predecessors(stack.pop()):
            if pred not in live:
                live.add(pred)
                stack.append(pred)
    return live


def normalize_with_transducer(t: Transducer, w: EpWord) -> EpWord:
    """
    Lexicographically greatest output of t on the infinite word w.

    Args:
        t: a normalization transducer (letter to letter)
        w: input word

    Returns:
        The output word, eventually periodic

    Raises:
        ValueOutOfInterval: no infinite run reads w
    """
    successors = _configurations(t, w)
    live = _live(successors)
    node = (t.start, 0)
    if node not in live:
        raise ValueOutOfInterval(f"{w} has no normalized representation")
    seen: Dict[Configuration, int] = {}
    out: List[Digit] = []
    while node not in seen:
        seen[node] = len(out)
        digit, node = max((d, n) for d, n in successors[node] if n in live)
        out.append(digit)
    start = seen[node]
    return canonicalize(EpWord(tuple(out[:start]), tuple(out[start:])))


def normalize_exact(f: NumberField, w: EpWord, cap: Optional[int] = None) -> EpWord:
    """The (-beta)-expansion of the value of w, by exact evaluation and T_{-beta} iteration."""
    x = eval_ep(w, -1, f)
    if not in_interval(x):
        raise ValueOutOfInterval(f"value of {w} is outside [-beta/(beta+1), 1/(beta+1))")
    result = orbit_expansion(x, cap)
    if not result.is_periodic:
        raise CapExceeded(f"expansion of {x} not periodic", cap=resolve_cap(cap))
    return result.digits


def _alphabet_bound(f: NumberField, w: EpWord, c: Optional[int]) -> int:
    largest = max(abs(d) for d in w.digits())
    if c is None:
        return max(largest, floor_of(f.beta()))
    if largest > c:
        raise InvalidWord(f"{w} has a digit outside {{-{c}, ..., {c}}}")
    return c


def normalize(f: NumberField, w: EpWord, c: Optional[int] = None, state_cap: Optional[int] = None) -> EpWord:
    """
    Admissible (-beta)-expansion of the value of w.

    Computed twice, by exact evaluation and by the normalization
    transducer; the results must coincide.

    Args:
        f: field of a Pisot number beta
        w: word over {-c, ..., c}
        c: alphabet bound; the smallest admissible one when None
        state_cap: cap for the transducer construction

    Returns:
        canonical EpWord over {0, ..., floor(beta)}
    """
    c = _alphabet_bound(f, w, c)
    exact = normalize_exact(f, w)
    via = normalize_with_transducer(build_normalization_transducer(f, c, state_cap), w)
    if via != exact:
        logger.error(f"normalization of {w}: transducer gives {via}, exact path gives {exact}")
        raise TransducerError(f"normalization paths disagree on {w}")
    return exact


def alternate_signs(w: EpWord) -> EpWord:
    """x_1 x_2 x_3 ... -> (-x_1) x_2 (-x_3) ... (the period is doubled when odd)."""

    def signed(i: int) -> Digit:
        return -w.digit(i) if i % 2 == 0 else w.digit(i)

    length = w.p if w.p % 2 == 0 else 2 * w.p
    return EpWord(
        tuple(signed(i) for i in range(w.m)),
        tuple(signed(i) for i in range(w.m, w.m + length)),
    )


def convert_neg_to_pos(f: NumberField, w: EpWord, state_cap: Optional[int] = None) -> EpWord:
    """
    The beta-expansion of a nonnegative value given by a (-beta)-expansion.

    Odd positions change sign, turning the word into a base beta
    representation on {-floor(beta), ..., floor(beta)}, which is then
    normalized in base beta. The transducer result is checked against
    exact evaluation followed by T_beta iteration.
    """
    x = eval_ep(w, -1, f)
    if sign(x) < 0 or not in_interval(x):
        raise ValueOutOfInterval(f"value of {w} is not in [0, 1/(beta+1))")
    c = floor_of(f.beta())
    signed = alternate_signs(w)
    if max(abs(d) for d in signed.digits()) > c:
        raise InvalidWord(f"{w} has a digit above floor(beta)")
    result = beta_orbit_expansion(x)
    if not result.is_periodic:
        raise CapExceeded(f"beta-expansion of {x} not periodic", cap=resolve_cap(None))
    via = normalize_with_transducer(build_pos_normalization_transducer(f, c, state_cap), signed)
    if via != result.digits:
        logger.error(f"conversion of {w}: transducer gives {via}, exact path gives {result.digits}")
        raise TransducerError(f"conversion paths disagree on {w}")
    return via
