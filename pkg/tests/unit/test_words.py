import random
from fractions import Fraction

import pytest

from src.expansion import int_negabase
from src.utils.errors import EmptyPeriod, InvalidWord, LengthMismatch
from src.words import (
    EpWord,
    Order,
    alt_compare,
    canonicalize,
    complement,
    eval_ep,
    eval_finite,
    format_word,
    is_asmax,
    is_asmin,
    parse_word,
    short_alt_compare,
)


def test_empty_period_rejected():
    with pytest.raises(EmptyPeriod):
        EpWord((1,), ())


def test_digit_prefix_shift():
    w = EpWord((2,), (0, 1))
    assert w.prefix(5) == (2, 0, 1, 0, 1)
    assert w.digit(6) == 1
    assert w.shift(1) == EpWord((), (0, 1))
    assert w.shift(4) == EpWord((), (1, 0))


@pytest.mark.parametrize(
    "word, expected",
    [
        (EpWord((1, 0), (1, 0, 1, 0)), EpWord((), (1, 0))),
        (EpWord((0, 0), (0,)), EpWord((), (0,))),
        (EpWord((1,), (2, 2, 2)), EpWord((1,), (2,))),
        (EpWord((2, 0, 1), (0, 1)), EpWord((2,), (0, 1))),
    ],
)
def test_canonicalize(word, expected):
    assert canonicalize(word) == expected
    assert canonicalize(expected) == expected


def test_alt_compare_reverses_odd_positions():
    assert alt_compare((1,), (0,)) == Order.LT
    assert alt_compare((0, 1), (0, 0)) == Order.GT
    assert alt_compare((1, 0), (1, 0)) == Order.EQ
    assert alt_compare(EpWord((), (1, 0)), EpWord((1,), (0,))) == Order.LT
    assert alt_compare(EpWord((), (0,)), (0, 0, 0)) == Order.EQ


def test_alt_compare_length_mismatch():
    with pytest.raises(LengthMismatch):
        alt_compare((1, 0), (1,))


def test_alt_order_is_numeric_order_in_negative_base(base3):
    """u <_alt v exactly when the value of .u is below the value of .v in base -3."""
    rng = random.Random(7)
    for _ in range(200):
        u = tuple(rng.randrange(3) for _ in range(4))
        v = tuple(rng.randrange(3) for _ in range(4))
        order = alt_compare(u, v)
        diff = eval_finite(u, -1, base3, scale=4) - eval_finite(v, -1, base3, scale=4)
        value = diff.coords[0]
        assert order == Order((value > 0) - (value < 0))


def test_short_alt_order_matches_integers():
    for b in (2, 3):
        words = {n: int_negabase(n, b) for n in range(-40, 501)}
        for n in range(501):
            for m in range(n + 1):
                expected = Order((n > m) - (n < m))
                assert short_alt_compare(words[n], words[m]) == expected
        for n in range(-40, 41):
            for m in range(-40, 41, 7):
                assert short_alt_compare(words[n], words[m]) == Order((n > m) - (n < m))


def test_asmin_asmax():
    assert is_asmin(EpWord((1,), (0,)), 1)
    assert is_asmin(EpWord((), (2, 1)), 2)
    assert not is_asmin(EpWord((), (0, 1)), 1)
    assert not is_asmin(EpWord((1,), (1, 0)), 1)
    assert is_asmax(EpWord((0, 1), (0,)), 0, 1)
    assert is_asmax(complement(EpWord((1,), (0,)), 0, 1), 0, 1)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1~10", (1, -1, 0)),
        ("12,3,-1", (12, 3, -1)),
        (".1(10)", EpWord((1,), (1, 0))),
        ("(0)", EpWord((), (0,))),
        ("10,~2(11)", EpWord((10, -2), (11,))),
    ],
)
def test_parse_word(text, expected):
    assert parse_word(text) == expected


@pytest.mark.parametrize("text", ["1a", "1~", "~~1", "1(0", "(1)(2)"])
def test_parse_word_rejects(text):
    with pytest.raises(InvalidWord):
        parse_word(text)


def test_format_word():
    assert format_word((1, -1, 0)) == "1~10"
    assert format_word((12, 3, -1)) == "12,3,-1"
    assert format_word(EpWord((1,), (1, 0)), radix_point=True) == ".1(10)"
    assert format_word(EpWord((), (0,))) == "(0)"


def test_eval_finite_integer(base2):
    assert eval_finite((1, 1, 0, 1, 0), -1, base2) == base2.from_rational(6)
    assert eval_finite((1, 1, 0), 1, base2) == base2.from_rational(6)


def test_eval_ep_negative_base(base2, golden):
    assert eval_ep(EpWord((), (0, 1)), -1, base2) == base2.from_rational(Fraction(1, 3))
    assert eval_ep(EpWord((1,), (2,)), -1, base2) == base2.from_rational(Fraction(-1, 6))
    assert eval_ep(EpWord((1,), (1, 0)), -1, base2) == base2.from_rational(Fraction(-1, 6))
    # .1(0) in base -G is -1/G, the left end of the interval
    assert eval_ep(EpWord((1,), (0,)), -1, golden) == -(1 / golden.beta())


def test_eval_ep_positive_base(golden):
    # .11 = 1 in base G
    assert eval_ep(EpWord((1, 1), (0,)), 1, golden) == golden.one()
    assert eval_ep(EpWord((), (1, 0)), 1, golden) == golden.one()
