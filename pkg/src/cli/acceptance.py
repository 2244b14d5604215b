"""
Acceptance checks run by ``selftest``.

Each check exercises one end-to-end property on the reference bases
(golden mean G, G^2, the integers 2 and 3, sqrt 2) and raises CheckFailed
with the first counterexample. Random inputs come from fixed seeds.
"""

import itertools
import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence

from src.automata import (
    Automaton,
    ShiftKind,
    build_shift_automaton,
    classify,
    cover,
    entropy,
    is_isomorphic,
    language,
)
from src.expansion import (
    d_beta,
    d_left,
    d_star,
    in_interval,
    int_negabase,
    is_admissible,
    is_beta_admissible,
    left_endpoint,
    negative_alphabet,
    orbit_expansion,
    positive_alphabet,
    right_endpoint,
)
from src.numberfield import approx, field_from_integer, floor_of, is_pisot, make_field, parse_polynomial, sign
from src.numberfield.models import NumberField
from src.transducers import (
    build_normalization_transducer,
    build_online_transducer,
    build_redundancy_transducer,
    convert_int,
    convert_quadratic,
    normalize_exact,
    normalize_with_transducer,
    online_convert,
    online_delay,
    online_state_within_bounds,
    run_online,
)
from src.utils.errors import NegabetaError, StateCapExceeded
from src.words import EpWord, Order, alt_compare, eval_ep, eval_finite

logger = logging.getLogger(__name__)

SEED = 2024


class CheckFailed(NegabetaError):
    pass


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], None]


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailed(message)


def _golden() -> NumberField:
    return make_field(parse_polynomial("-1,-1,1"))


def _golden_squared() -> NumberField:
    return make_field(parse_polynomial("1,-3,1"))


def _silver() -> NumberField:
    return make_field(parse_polynomial("-1,-2,1"))


def check_integer_negabase() -> None:
    for n, expected in ((3, (1, 1, 1)), (4, (1, 0, 0)), (6, (1, 1, 0, 1, 0))):
        _expect(int_negabase(n, 2) == expected, f"<{n}>_-2 = {int_negabase(n, 2)}")
    for b in (2, 3, 10):
        f = field_from_integer(b)
        for n in range(-300, 301):
            _expect(eval_finite(int_negabase(n, b), -1, f) == f.from_rational(n), f"<{n}>_-{b} has another value")


def check_integer_converter() -> None:
    for b in (2, 3, 5):
        for n in range(501):
            _expect(convert_int(n, b) == int_negabase(n, b), f"converter and division disagree on {n} in base -{b}")


def check_golden_mean_shift() -> None:
    f = _golden()
    _expect(orbit_expansion(left_endpoint(f)).digits == EpWord((1,), (0,)), "d(-G/(G+1)) is not 1(0)")
    even_shift = Automaton((0, 1), (0, 1), {(0, 1): 0, (0, 0): 1, (1, 0): 0}, 0, frozenset({0, 1}))
    c = cover(build_shift_automaton(f))
    _expect(is_isomorphic(c, even_shift, respect_initial=False), "cover is not the even shift")
    _expect(classify(f).kind == ShiftKind.SOFIC_NOT_FINITE_TYPE, "golden mean shift is not strictly sofic")


def check_golden_squared_shift() -> None:
    f = _golden_squared()
    _expect(d_left(f) == EpWord((), (2, 1)), f"d = {d_left(f)}")
    result = classify(f)
    _expect(result.kind == ShiftKind.FINITE_TYPE, "G^2 shift is not of finite type")
    _expect(result.forbidden_factors == frozenset({(2, 0)}), f"forbidden factors {result.forbidden_factors}")
    expected = Automaton(
        (0, 1), (0, 1, 2), {(0, 0): 0, (0, 1): 0, (0, 2): 1, (1, 1): 0, (1, 2): 1}, 0, frozenset({0, 1})
    )
    _expect(is_isomorphic(build_shift_automaton(f), expected), "G^2 shift automaton has another shape")


def check_entropy() -> None:
    for f in (_golden(), _golden_squared(), field_from_integer(2), field_from_integer(3)):
        h = entropy(build_shift_automaton(f))
        log_beta = math.log(approx(f.beta()))
        _expect(abs(h - log_beta) <= 1e-9, f"entropy {h} against log beta {log_beta} for {f.min_poly}")


def _factor_condition(word: Sequence[int], lower: EpWord, upper: EpWord) -> bool:
    for k in range(1, len(word) + 1):
        v = tuple(word[len(word) - k:])
        if alt_compare(lower.prefix(k), v) == Order.GT or alt_compare(v, upper.prefix(k)) == Order.GT:
            return False
    return True


def check_admissible_factors() -> None:
    for f in (_golden(), _golden_squared(), field_from_integer(2)):
        lower, upper = d_left(f), d_star(f)
        alphabet = tuple(negative_alphabet(f))
        words = (w for n in range(9) for w in itertools.product(alphabet, repeat=n))
        brute = {w for w in words if _factor_condition(w, lower, upper)}
        _expect(language(build_shift_automaton(f), 8) == brute, f"factor languages differ for {f.min_poly}")


def check_pisot_periodicity() -> None:
    rng = random.Random(SEED)
    for f in (_golden(), _golden_squared()):
        checked = 0
        while checked < 100:
            q = rng.randint(1, 50)
            x = f.from_rational(Fraction(rng.randint(-q, q), q))
            if not in_interval(x):
                continue
            result = orbit_expansion(x)
            _expect(result.is_periodic, f"orbit of {x} not periodic")
            _expect(eval_ep(result.digits, -1, f) == x, f"expansion of {x} has another value")
            checked += 1


def check_online_conversion() -> None:
    f = _golden()
    _expect(online_delay(f) == 4, "delay of G is not 4")
    _expect(online_delay(field_from_integer(2)) == 2, "delay of 2 is not 2")
    delta, beta, n = online_delay(f), f.beta(), 20
    bound = (beta / (beta + 1) + floor_of(beta) * beta ** (-delta)) * beta ** (-n)
    rng = random.Random(SEED)
    checked = 0
    while checked < 100:
        x = f.from_coords(Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(f.degree))
        if sign(x) < 0 or sign(x - right_endpoint(f)) >= 0:
            continue
        residual = x - eval_finite(online_convert(f, d_beta(x, delta + n), n), -1, f, scale=n)
        _expect(sign(bound - residual) >= 0 and sign(bound + residual) >= 0, f"residual of {x} too large")
        checked += 1


def check_online_transducer() -> None:
    rng = random.Random(SEED)
    for f in (field_from_integer(2), _golden()):
        t = build_online_transducer(f)
        alphabet = list(positive_alphabet(f))
        checked = 0
        while checked < 100:
            word = (0, 0) + tuple(rng.choice(alphabet) for _ in range(14))
            if not is_beta_admissible(word, f):
                continue
            _expect(run_online(t, word) == online_convert(f, word, len(word) - t.delay), f"runs differ on {word}")
            checked += 1
        _expect(all(online_state_within_bounds(f, t.payloads[q]) for q in t.synchronous), "state beyond its bound")


def check_normalization() -> None:
    base2 = field_from_integer(2)
    binary = build_normalization_transducer(base2, 2, None, (0, 1))
    _expect(normalize_with_transducer(binary, EpWord((0,), (0, 1))) == EpWord((1,), (1, 0)), ".0(01) is not .1(10)")
    f = _golden()
    t = build_normalization_transducer(f, 1)
    rng = random.Random(SEED)
    checked = 0
    while checked < 100:
        w = EpWord(
            tuple(rng.randint(-1, 1) for _ in range(rng.randint(0, 4))),
            tuple(rng.randint(-1, 1) for _ in range(rng.randint(1, 4))),
        )
        x = eval_ep(w, -1, f)
        if not in_interval(x):
            continue
        via = normalize_with_transducer(t, w)
        _expect(via == normalize_exact(f, w), f"transducer and exact paths differ on {w}")
        _expect(is_admissible(via, f) and eval_ep(via, -1, f) == x, f"normal form of {w} is wrong")
        checked += 1


def _no_factor(word: Sequence[int], a: int) -> bool:
    return all(not (x == a and y >= 1) for x, y in zip(word, word[1:]))


def check_quadratic_converter() -> None:
    rng = random.Random(SEED)
    for a, f in ((1, _golden()), (2, _silver())):
        checked = 0
        while checked < 50:
            x0 = rng.randint(0, a)
            fraction = EpWord(
                tuple(rng.randint(0, a) for _ in range(rng.randint(0, 4))),
                tuple(rng.randint(0, a) for _ in range(rng.randint(1, 4))),
            )
            if not _no_factor((x0,) + fraction.prefix(fraction.m + 2 * fraction.p + 2), a):
                continue
            y0, rest = convert_quadratic(a, x0, fraction)
            _expect(y0 + eval_ep(rest, -1, f) == x0 + eval_ep(fraction, 1, f), f"value changed on {x0}.{fraction}")
            checked += 1


def check_non_pisot() -> None:
    f = make_field(parse_polynomial("-2,0,1"))
    _expect(not is_pisot(f), "sqrt 2 reported as Pisot")
    try:
        build_redundancy_transducer(f, 1, state_cap=10 ** 4)
    except StateCapExceeded:
        return
    raise CheckFailed("redundancy transducer for sqrt 2 stayed under 10^4 states")


CHECKS: List[Check] = [
    Check("integer base -b", check_integer_negabase),
    Check("integer converter", check_integer_converter),
    Check("golden mean shift", check_golden_mean_shift),
    Check("G^2 shift", check_golden_squared_shift),
    Check("entropy is log beta", check_entropy),
    Check("admissible factors", check_admissible_factors),
    Check("eventual periodicity", check_pisot_periodicity),
    Check("on-line conversion", check_online_conversion),
    Check("on-line transducer", check_online_transducer),
    Check("normalization", check_normalization),
    Check("quadratic converter", check_quadratic_converter),
    Check("non-Pisot state cap", check_non_pisot),
]
