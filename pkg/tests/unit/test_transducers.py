import itertools
import random
from fractions import Fraction

import pytest

from src.expansion import (
    beta_orbit_expansion,
    d_beta,
    in_interval,
    is_admissible,
    is_beta_admissible,
    int_negabase,
    negative_alphabet,
    orbit_expansion,
    positive_alphabet,
    right_endpoint,
)
from src.numberfield import conjugate_embeddings, conjugates, floor_of, is_pisot, sign
from src.transducers import (
    TransducerKind,
    accepts_pair,
    alternate_signs,
    build_int_converter,
    build_normalization_transducer,
    build_online_transducer,
    build_quadratic_converter,
    build_redundancy_transducer,
    convert_int,
    convert_neg_to_pos,
    convert_quadratic,
    from_document,
    from_dot,
    iter_online,
    normalize,
    normalize_exact,
    normalize_with_transducer,
    online_bounds,
    online_convert,
    online_delay,
    online_state_within_bounds,
    run_online,
    run_sequential,
    run_sequential_ep,
    to_document,
    to_dot,
)
from src.utils.errors import InvalidBlock, InvalidWord, NoRun, OutOfDomain, StateCapExceeded, ValueOutOfInterval
from src.words import EpWord, eval_ep, eval_finite


def _no_factor(word, a):
    """True when no digit a is followed by a nonzero digit."""
    return all(not (x == a and y >= 1) for x, y in zip(word, word[1:]))


# integer conversion

def test_int_converter_shape():
    t = build_int_converter(2)
    assert t.kind == TransducerKind.RIGHT_SEQUENTIAL
    assert len(t) == 2
    assert t.block_size == 2
    assert t.final_outputs == {1: (1,)}


@pytest.mark.parametrize("n, expected", [(6, (1, 1, 0, 1, 0)), (3, (1, 1, 1)), (4, (1, 0, 0)), (0, (0,))])
def test_convert_int_base2(n, expected):
    assert convert_int(n, 2) == expected


def test_convert_int_matches_division():
    for b in (2, 3, 5, 10):
        for n in range(0, 501):
            assert convert_int(n, b) == int_negabase(n, b), (n, b)


def test_run_sequential_rejects_infinite_right_machine():
    with pytest.raises(ValueError):
        run_sequential_ep(build_int_converter(2), EpWord((), (1,)))


def test_run_sequential_no_edge():
    with pytest.raises(NoRun):
        run_sequential(build_int_converter(2), (2, 0))


# quadratic conversion

def test_quadratic_converter_states():
    t = build_quadratic_converter(1)
    assert t.kind == TransducerKind.LEFT_SEQUENTIAL
    assert t.name(1) == "-1"
    assert t.block_size == 2


def test_convert_quadratic_golden_example():
    y0, rest = convert_quadratic(1, 0, EpWord((1,), (0,)))
    assert (y0, rest) == (1, EpWord((0,), (0, 1)))


@pytest.mark.parametrize("a, fixture", [(1, "golden"), (2, "silver")])
def test_convert_quadratic_preserves_value(a, fixture, request):
    f = request.getfixturevalue(fixture)
    rng = random.Random(a)
    checked = 0
    while checked < 100:
        x0 = rng.randint(0, a)
        pre = tuple(rng.randint(0, a) for _ in range(rng.randint(0, 4)))
        per = tuple(rng.randint(0, a) for _ in range(rng.randint(1, 4)))
        fraction = EpWord(pre, per)
        if not _no_factor((x0,) + fraction.prefix(len(pre) + 2 * len(per) + 2), a):
            continue
        y0, rest = convert_quadratic(a, x0, fraction)
        assert y0 + eval_ep(rest, -1, f) == x0 + eval_ep(fraction, 1, f)
        assert all(0 <= d <= a for d in rest.digits())
        checked += 1


def test_convert_quadratic_rejects_forbidden_factor():
    with pytest.raises(InvalidBlock):
        convert_quadratic(1, 1, EpWord((1,), (0,)))
    with pytest.raises(InvalidBlock):
        convert_quadratic(1, 0, EpWord((2,), (0,)))


# on-line conversion

@pytest.mark.parametrize(
    "fixture, delay", [("golden", 4), ("golden_squared", 4), ("base2", 2), ("base3", 2)]
)
def test_online_delay(fixture, delay, request):
    assert online_delay(request.getfixturevalue(fixture)) == delay


def test_online_third_in_base2(base2):
    stream = iter_online(base2, EpWord((), (0, 1)))
    (y1, q1), (y2, q2) = next(stream), next(stream)
    assert (y1, y2) == (0, 1)
    assert q1 == base2.from_rational(Fraction(-1, 2))
    assert q2 == base2.from_rational(Fraction(1, 4))
    assert online_convert(base2, EpWord((), (0, 1)), 6) == (0, 1, 0, 1, 0, 1)


@pytest.mark.parametrize("fixture", ["golden", "golden_squared", "base2"])
def test_online_keeps_value(fixture, request):
    """x = .y_1...y_n in base -beta plus (-beta)^-n q after delta + n input digits."""
    f = request.getfixturevalue(fixture)
    delta = online_delay(f)
    alphabet = list(positive_alphabet(f))
    outputs = negative_alphabet(f)
    beta = f.beta()
    rng = random.Random(5)
    checked = 0
    while checked < 15:
        n = rng.randint(1, 12)
        x = (0,) + tuple(rng.choice(alphabet) for _ in range(delta + n - 1))
        value = eval_finite(x, 1, f, scale=len(x))
        if sign(value - right_endpoint(f)) >= 0:
            continue
        pairs = list(itertools.islice(iter_online(f, x), n))
        y = tuple(d for d, _ in pairs)
        q = pairs[-1][1]
        assert value == eval_finite(y, -1, f, scale=n) + q * (-beta) ** (-n)
        assert all(d in outputs for d in y)
        checked += 1


@pytest.mark.parametrize("fixture", ["golden", "base2"])
def test_online_residual_bound(fixture, request):
    """|x - .y_1...y_n| <= (beta/(beta+1) + floor(beta)/beta^delta) beta^-n in base -beta."""
    f = request.getfixturevalue(fixture)
    delta, beta, n = online_delay(f), f.beta(), 20
    bound = (beta / (beta + 1) + floor_of(beta) * beta ** (-delta)) * beta ** (-n)
    rng = random.Random(20)
    checked = 0
    while checked < 100:
        x = f.from_coords(Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(f.degree))
        if sign(x) < 0 or sign(x - right_endpoint(f)) >= 0:
            continue
        y = online_convert(f, d_beta(x, delta + n), n)
        residual = x - eval_finite(y, -1, f, scale=n)
        assert sign(bound - residual) >= 0 and sign(bound + residual) >= 0
        checked += 1


def test_online_rejects_large_values(golden):
    with pytest.raises(OutOfDomain):
        online_convert(golden, (1, 0, 0, 0, 0), 1)
    with pytest.raises(OutOfDomain):
        online_convert(golden, (0, 2, 0, 0, 0), 1)


def test_online_transducer_shape(golden):
    t = build_online_transducer(golden)
    assert t.kind == TransducerKind.ONLINE
    assert t.delay == 4
    assert 0 in t.transient


@pytest.mark.parametrize("fixture", ["golden", "base2"])
def test_online_transducer_matches_algorithm(fixture, request):
    f = request.getfixturevalue(fixture)
    t = build_online_transducer(f)
    alphabet = list(positive_alphabet(f))
    rng = random.Random(3)
    checked = 0
    while checked < 100:
        word = (0, 0) + tuple(rng.choice(alphabet) for _ in range(14))
        if not is_beta_admissible(word, f):
            continue
        assert run_online(t, word) == online_convert(f, word, len(word) - t.delay)
        checked += 1
    assert all(online_state_within_bounds(f, t.payloads[q]) for q in t.synchronous)


def test_online_states_within_bounds(golden):
    t = build_online_transducer(golden)
    (bound,) = online_bounds(golden)
    assert float(bound) == pytest.approx((1 + 0.6180339887 ** -4) / (1 - 0.6180339887), rel=1e-6)
    assert all(online_state_within_bounds(golden, t.payloads[q]) for q in t.synchronous)


def test_online_transducer_integer_base(base2):
    t = build_online_transducer(base2)
    assert online_bounds(base2) == []
    assert run_online(t, (0, 1, 0, 1, 0, 1)) == (0, 1, 0, 1)


def test_online_state_cap(golden):
    with pytest.raises(StateCapExceeded):
        build_online_transducer(golden, state_cap=3)


# redundancy and normalization

def test_redundancy_transducer_pairs(golden):
    t = build_redundancy_transducer(golden, 1)
    # .110 and .001 have the same value in base -G
    assert accepts_pair(t, (1, 1, 0), (0, 0, 1))
    assert not accepts_pair(t, (1,) * 6, (0,) * 6)
    assert not accepts_pair(t, (1, 0), (1,))


@pytest.mark.parametrize("fixture, c", [("golden", 1), ("golden_squared", 2)])
def test_redundancy_states_obey_conjugate_bound(fixture, c, request):
    f = request.getfixturevalue(fixture)
    t = build_redundancy_transducer(f, c)
    (r,) = conjugates(f)
    limit = 2 * c / (1 - abs(r))
    assert all(abs(conjugate_embeddings(s)[0]) < limit for s in t.payloads.values())
    assert len(t) > 1
    assert accepts_pair(t, (c, 0, c), (c, 0, c))


def test_redundancy_transducer_needs_pisot(sqrt2):
    assert not is_pisot(sqrt2)
    with pytest.raises(StateCapExceeded):
        build_redundancy_transducer(sqrt2, 1, state_cap=50)
    with pytest.raises(StateCapExceeded) as excinfo:
        build_redundancy_transducer(sqrt2, 1, state_cap=10 ** 4)
    assert excinfo.value.count == 10 ** 4 + 1


def test_redundancy_alphabet_bound(base2):
    with pytest.raises(ValueError):
        build_redundancy_transducer(base2, 1)


def test_normalize_base2_default_alphabet(base2):
    w = EpWord((0,), (0, 1))
    assert normalize(base2, w) == EpWord((1,), (2,))
    assert normalize_exact(base2, w) == EpWord((1,), (2,))


def test_normalize_base2_binary_outputs(base2):
    t = build_normalization_transducer(base2, 2, None, (0, 1))
    assert normalize_with_transducer(t, EpWord((0,), (0, 1))) == EpWord((1,), (1, 0))


@pytest.mark.parametrize("fixture, c", [("golden", 1), ("golden", 2), ("golden_squared", 2), ("base2", 2)])
def test_normalize_random_words(fixture, c, request):
    f = request.getfixturevalue(fixture)
    rng = random.Random(c * 31 + len(fixture))
    checked = 0
    while checked < 15:
        pre = tuple(rng.randint(-c, c) for _ in range(rng.randint(0, 3)))
        per = tuple(rng.randint(-c, c) for _ in range(rng.randint(1, 3)))
        w = EpWord(pre, per)
        x = eval_ep(w, -1, f)
        if not in_interval(x):
            with pytest.raises(ValueOutOfInterval):
                normalize(f, w, c)
            continue
        assert normalize(f, w, c) == orbit_expansion(x).digits
        checked += 1


def test_normalization_transducer_agrees_with_exact_path(golden):
    t = build_normalization_transducer(golden, 1)
    rng = random.Random(10)
    checked = 0
    while checked < 100:
        pre = tuple(rng.randint(-1, 1) for _ in range(rng.randint(0, 4)))
        per = tuple(rng.randint(-1, 1) for _ in range(rng.randint(1, 4)))
        w = EpWord(pre, per)
        if not in_interval(eval_ep(w, -1, golden)):
            continue
        via = normalize_with_transducer(t, w)
        assert via == normalize_exact(golden, w)
        assert is_admissible(via, golden)
        assert eval_ep(via, -1, golden) == eval_ep(w, -1, golden)
        checked += 1


def test_normalize_rejects_large_digits(golden):
    with pytest.raises(InvalidWord):
        normalize(golden, EpWord((), (3,)), 2)


# conversion from base -beta to base beta

def test_alternate_signs_doubles_odd_period():
    assert alternate_signs(EpWord((0,), (1,))) == EpWord((0,), (1, -1))
    assert alternate_signs(EpWord((1, 2), (1, 0))) == EpWord((-1, 2), (-1, 0))


def test_convert_neg_to_pos_base2(base2):
    assert convert_neg_to_pos(base2, EpWord((0,), (1,))) == EpWord((0,), (0, 1))


@pytest.mark.parametrize("fixture", ["golden", "base2", "golden_squared"])
def test_convert_neg_to_pos_random(fixture, request):
    f = request.getfixturevalue(fixture)
    rng = random.Random(17)
    checked = 0
    while checked < 15:
        q = rng.randint(2, 12)
        x = f.from_rational(Fraction(rng.randint(0, q), q))
        if not in_interval(x):
            continue
        w = orbit_expansion(x).digits
        assert convert_neg_to_pos(f, w) == beta_orbit_expansion(x).digits
        checked += 1


def test_convert_neg_to_pos_rejects_negative_values(base2):
    with pytest.raises(ValueOutOfInterval):
        convert_neg_to_pos(base2, EpWord((1,), (0,)))


# export

def test_transducer_document_round_trip():
    t = build_int_converter(3)
    back = from_document(to_document(t))
    assert back.edges == t.edges
    assert back.kind == t.kind
    assert back.final_outputs == t.final_outputs


def test_transducer_dot_round_trip():
    t = build_quadratic_converter(2)
    text = to_dot(t)
    assert 'comment="kind: left-sequential; delay: 0";' in text
    assert '[label="0,1|1,1"]' in text
    back = from_dot(text)
    assert set(back.edges) == set(t.edges)
    assert back.name(1) == "-1"
    int_back = from_dot(to_dot(build_int_converter(2)))
    assert int_back.final_outputs == {1: (1,)}
    assert int_back.kind == TransducerKind.RIGHT_SEQUENTIAL


def test_online_transducer_export(base2):
    t = build_online_transducer(base2)
    doc = to_document(t)
    assert doc.delay == 2
    assert sorted(doc.transient) == sorted(t.transient)
    assert "ε" in to_dot(t)
