"""
On-line conversion from base beta to base -beta.

After a latency of delta digits the algorithm emits one digit of the
(-beta)-representation per digit read. The remainder q is kept exactly as
Q = q * beta^delta in Z[beta]:

    Z = -beta Q + (-1)^j x_{delta+j}
    y_j is chosen from z = Z / beta^delta
    Q' = Z - y_j beta^delta

For a Pisot beta the reachable remainders are finitely many, which gives the
finite on-line transducer.
"""

import itertools
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import mpmath

from src.config import get_settings
from src.expansion.negative import left_endpoint, right_endpoint
from src.expansion.positive import positive_alphabet
from src.numberfield.field import conjugates, conjugate_embeddings, is_pisot
from src.numberfield.intervals import floor_of, sign
from src.numberfield.models import FieldElement, NumberField
from src.transducers.models import OnlineState, Transducer, TransducerEdge, TransducerKind
from src.utils.decorators import log_io
from src.utils.errors import NoRun, OutOfDomain, StateCapExceeded
from src.words.models import Digit, EpWord, FiniteWord

logger = logging.getLogger(__name__)


@lru_cache(maxsize=64)
def online_delay(f: NumberField) -> int:
    """
    Smallest delta >= 1 with m/beta^(delta-1) + m/beta^delta <= 1 - {beta}.

    m is the largest input digit, ceil(beta) - 1; it equals floor(beta) unless
    beta is an integer.
    """
    beta = f.beta()
    top = max(positive_alphabet(f))
    slack = 1 - (beta - floor_of(beta))
    delta = 1
    while sign(top * beta ** (1 - delta) + top * beta ** (-delta) - slack) > 0:
        delta += 1
    return delta


@dataclass(frozen=True)
class _Constants:
    delta: int
    beta: FieldElement
    floor_beta: int
    beta_delta: FieldElement
    beta_minus_delta: FieldElement
    left: FieldElement
    right: FieldElement
    upper: FieldElement
    shift: FieldElement
    lower_odd: FieldElement


@lru_cache(maxsize=64)
def _constants(f: NumberField) -> _Constants:
    delta = online_delay(f)
    beta = f.beta()
    left = left_endpoint(f)
    right = right_endpoint(f)
    top = max(positive_alphabet(f))
    return _Constants(
        delta=delta,
        beta=beta,
        floor_beta=floor_of(beta),
        beta_delta=beta ** delta,
        beta_minus_delta=beta ** (-delta),
        left=left,
        right=right,
        upper=beta * beta * right,
        shift=-left,
        lower_odd=left - top * beta ** (-delta),
    )


def _check_input(f: NumberField, x: Digit) -> None:
    if x not in positive_alphabet(f):
        raise OutOfDomain(f"input digit {x} is outside the alphabet of base beta")


def _transient_step(k: _Constants, value: FieldElement, level: int, x: Digit) -> FieldElement:
    """Q_level from Q_{level-1} (level is 1-based); the remainder never reaches 1/(beta+1)."""
    value = value + x * k.beta ** (k.delta - level)
    if sign(value * k.beta_minus_delta - k.right) >= 0:
        raise OutOfDomain("the input value is not below 1/(beta+1)")
    return value


def _synchronous_step(k: _Constants, value: FieldElement, j: int, x: Digit) -> Tuple[Digit, FieldElement]:
    """Digit y_j and Q_{delta+j} from Q_{delta+j-1}."""
    big = -(value * k.beta) + (x if j % 2 == 0 else -x)
    z = big * k.beta_minus_delta
    if sign(z - k.upper) > 0:
        y = k.floor_beta
    elif sign(z - k.left) < 0:
        y = 0
    else:
        y = floor_of(z + k.shift)
    q = z - y
    lower = k.lower_odd if j % 2 == 1 else k.left
    if sign(q - lower) < 0 or sign(q - k.right) >= 0:
        raise OutOfDomain(f"remainder left its bounds at step {j}; the input value is not below 1/(beta+1)")
    return y, big - y * k.beta_delta


def _digit_stream(digits: Union[Iterable[Digit], EpWord]) -> Iterator[Digit]:
    if isinstance(digits, EpWord):
        return (digits.digit(i) for i in itertools.count())
    return itertools.chain(digits, itertools.repeat(0))


def iter_online(f: NumberField, digits: Union[Iterable[Digit], EpWord]) -> Iterator[Tuple[Digit, FieldElement]]:
    """
    Run the on-line algorithm lazily.

    Args:
        f: the field of beta
        digits: x_1 x_2 ... over {0, ..., ceil(beta) - 1}; a finite word is
            followed by zeros

    Yields:
        (y_j, q_{delta+j}) for j = 1, 2, ...
    """
    k = _constants(f)
    stream = _digit_stream(digits)
    value = f.zero()
    for level in range(1, k.delta + 1):
        x = next(stream)
        _check_input(f, x)
        value = _transient_step(k, value, level, x)
    for j in itertools.count(1):
        x = next(stream)
        _check_input(f, x)
        y, value = _synchronous_step(k, value, j, x)
        yield y, value * k.beta_minus_delta


def online_convert(f: NumberField, digits: Union[Iterable[Digit], EpWord], n: int) -> FiniteWord:
    """The first n digits y_1 ... y_n of the (-beta)-representation, reading delta + n input digits."""
    return tuple(y for y, _ in itertools.islice(iter_online(f, digits), n))


def online_bounds(f: NumberField) -> List[mpmath.mpf]:
    """M_i = floor(beta) (1 + |beta_i|^-delta) / (1 - |beta_i|) for each conjugate; empty when not Pisot."""
    if f.degree == 1 or not is_pisot(f):
        return []
    k = _constants(f)
    bounds = []
    for r in conjugates(f):
        modulus = abs(r)
        bounds.append(k.floor_beta * (1 + modulus ** (-k.delta)) / (1 - modulus))
    return bounds


def online_state_within_bounds(f: NumberField, state: OnlineState) -> bool:
    """|q(beta_i)| <= M_i for every conjugate, q = value / beta^delta."""
    bounds = online_bounds(f)
    if not bounds:
        return True
    k = _constants(f)
    for value, r, bound in zip(conjugate_embeddings(state.value), conjugates(f), bounds):
        if abs(value) / abs(r) ** k.delta > bound * (1 + mpmath.mpf(10) ** -9):
            return False
    return True


@log_io
def build_online_transducer(f: NumberField, state_cap: Optional[int] = None) -> Transducer:
    """
    Finite on-line transducer realizing the conversion (beta Pisot).

    States are explored breadth first from q_0 = 0 under every input digit.
    Transient states are keyed by their level, synchronous ones by the
    parity of j; inputs that push the remainder out of its bounds have no
    edge.

    Args:
        f: the field of beta
        state_cap: maximal number of states; the configured state_cap when None

    Returns:
        ONLINE transducer with delay delta
    """
    cap = state_cap if state_cap is not None else get_settings().transducers.state_cap
    k = _constants(f)
    alphabet = tuple(positive_alphabet(f))
    index: Dict[tuple, int] = {}
    payloads: Dict[int, OnlineState] = {}
    names: Dict[int, str] = {}
    transient = set()
    edges: List[TransducerEdge] = []
    queue = deque()

    def visit(key: tuple, state: OnlineState) -> int:
        if key not in index:
            if len(index) >= cap:
                logger.warning(f"on-line transducer exceeds {cap} states")
                raise StateCapExceeded(f"more than {cap} states", count=len(index) + 1)
            q = len(index)
            index[key] = q
            payloads[q] = state
            names[q] = f"{key[0]}{key[1]}:{state.value}"
            queue.append(key)
        return index[key]

    visit(("t", 0), OnlineState(f.zero()))
    transient.add(0)
    while queue:
        key = queue.popleft()
        q = index[key]
        state = payloads[q]
        for x in alphabet:
            try:
                if key[0] == "t":
                    level = key[1] + 1
                    value = _transient_step(k, state.value, level, x)
                    if level < k.delta:
                        target = visit(("t", level, value), OnlineState(value))
                        transient.add(target)
                    else:
                        target = visit(("s", 0, value), OnlineState(value, 0))
                    edges.append(TransducerEdge(q, (x,), (), target))
                else:
                    j = 1 if state.phase == 0 else 2
                    y, value = _synchronous_step(k, state.value, j, x)
                    target = visit(("s", j % 2, value), OnlineState(value, j % 2))
                    edges.append(TransducerEdge(q, (x,), (y,), target))
            except OutOfDomain:
                continue
    states = tuple(range(len(index)))
    logger.info(f"on-line transducer for {f.min_poly}: {len(states)} states, delay {k.delta}")
    return Transducer(
        states=states,
        edges=tuple(edges),
        initial=frozenset({0}),
        finals=frozenset(states),
        kind=TransducerKind.ONLINE,
        delay=k.delta,
        transient=frozenset(transient),
        payloads=payloads,
        names=names,
    )


def run_online(t: Transducer, digits: Sequence[Digit]) -> FiniteWord:
    """Drive an on-line transducer; delta + n input digits give n output digits."""
    state = t.start
    out: List[Digit] = []
    for x in digits:
        e = t.edge(state, (x,))
        if e is None:
            raise NoRun(f"no edge reads {x} from state {t.name(state)}", state=state)
        out.extend(e.output)
        state = e.target
    return tuple(out)
