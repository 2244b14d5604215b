import random
from fractions import Fraction

import pytest

from src.expansion import (
    OrbitStatus,
    beta_orbit_expansion,
    d_beta,
    d_beta_one,
    d_left,
    d_minus_beta,
    d_star,
    d_star_beta_one,
    in_interval,
    int_negabase,
    int_to_base,
    is_admissible,
    is_beta_admissible,
    left_endpoint,
    negative_alphabet,
    orbit_expansion,
    positive_alphabet,
    right_endpoint,
    t_beta_step,
    t_minus_beta_step,
)
from src.numberfield import field_from_integer, sign
from src.utils.errors import CapExceeded, OutOfInterval
from src.words import EpWord, eval_ep, eval_finite


def _random_point(rng: random.Random, f, max_denominator: int):
    """A rational point of [-beta/(beta+1), 1/(beta+1))."""
    while True:
        q = rng.randint(1, max_denominator)
        x = f.from_rational(Fraction(rng.randint(-q, q), q))
        if in_interval(x):
            return x


def test_interval_endpoints(golden, base2):
    beta = golden.beta()
    assert left_endpoint(golden) == -beta / (beta + 1)
    assert right_endpoint(golden) == 1 / (beta + 1)
    assert left_endpoint(base2) == base2.from_rational(Fraction(-2, 3))
    assert in_interval(left_endpoint(golden))
    assert not in_interval(right_endpoint(golden))


def test_alphabets(golden, golden_squared, base2):
    assert list(negative_alphabet(golden)) == [0, 1]
    assert list(negative_alphabet(golden_squared)) == [0, 1, 2]
    assert list(negative_alphabet(base2)) == [0, 1, 2]
    assert list(positive_alphabet(base2)) == [0, 1]
    assert list(positive_alphabet(golden_squared)) == [0, 1, 2]


def test_step_outside_interval(golden):
    with pytest.raises(OutOfInterval):
        t_minus_beta_step(right_endpoint(golden))
    with pytest.raises(OutOfInterval):
        t_beta_step(golden.beta())


def test_d_minus_beta(base2):
    assert d_minus_beta(base2.from_rational(Fraction(-1, 6)), 4) == (1, 2, 2, 2)
    assert d_minus_beta(base2.zero(), 3) == (0, 0, 0)


def test_orbit_expansion_of_left_endpoint(golden):
    result = orbit_expansion(left_endpoint(golden))
    assert result.status == OrbitStatus.PERIODIC
    assert result.digits == EpWord((1,), (0,))
    assert result.preperiod_length == 1
    assert result.period_length == 1
    assert len(result.points) == 2


@pytest.mark.parametrize("fixture", ["golden", "golden_squared", "base2", "base3", "silver"])
def test_orbit_expansion_recovers_value(fixture, request):
    f = request.getfixturevalue(fixture)
    rng = random.Random(2024)
    for _ in range(100):
        x = _random_point(rng, f, 50)
        result = orbit_expansion(x)
        assert result.is_periodic
        assert eval_ep(result.digits, -1, f) == x
        assert is_admissible(result.digits, f)


def test_prefix_digits_bound_the_value(golden_squared):
    """|x - .d_1...d_n| < beta^-n in base -beta."""
    f = golden_squared
    rng = random.Random(11)
    for _ in range(20):
        x = _random_point(rng, f, 9)
        for n in (1, 4, 9):
            error = x - eval_finite(d_minus_beta(x, n), -1, f, scale=n)
            bound = f.beta() ** (-n)
            assert sign(bound - error) > 0 and sign(bound + error) > 0


def test_orbit_cap(sqrt2):
    result = orbit_expansion(left_endpoint(sqrt2), cap=50)
    assert result.status == OrbitStatus.CAP_EXCEEDED
    assert len(result.digits) == 50
    with pytest.raises(CapExceeded):
        d_left(sqrt2, cap=50)


def test_reference_words(golden, golden_squared, base2):
    assert d_left(golden) == EpWord((1,), (0,))
    assert d_star(golden) == EpWord((0, 1), (0,))
    assert d_left(golden_squared) == EpWord((), (2, 1))
    assert d_star(golden_squared) == EpWord((0,), (2, 1))
    # purely periodic with odd period
    assert d_left(base2) == EpWord((), (2,))
    assert d_star(base2) == EpWord((), (0, 1))


def test_is_admissible(golden, golden_squared):
    assert is_admissible(EpWord((1,), (0,)), golden)
    assert not is_admissible(EpWord((), (1, 0)), golden)
    assert not is_admissible(EpWord((), (2,)), golden)
    assert is_admissible((1, 1, 0, 0, 1), golden)
    assert not is_admissible((1, 0, 1), golden)
    assert not is_admissible((1, 2, 0), golden_squared)
    assert is_admissible((2, 1, 2, 2), golden_squared)


def test_beta_expansions(golden, base2):
    assert d_beta(base2.from_rational(Fraction(1, 3)), 4) == (0, 1, 0, 1)
    assert d_beta_one(golden) == EpWord((1, 1), (0,))
    assert d_star_beta_one(golden) == EpWord((), (1, 0))
    assert beta_orbit_expansion(base2.from_rational(Fraction(1, 6))).digits == EpWord((0,), (0, 1))
    assert is_beta_admissible(EpWord((), (1, 0, 0)), golden)
    assert not is_beta_admissible(EpWord((), (1, 1, 0)), golden)
    assert is_beta_admissible((1, 0, 1, 0), golden)
    assert not is_beta_admissible((0, 1, 1), golden)


@pytest.mark.parametrize("n, b, expected", [(6, 2, (1, 1, 0, 1, 0)), (-6, 2, (1, 1, 1, 0)), (0, 3, (0,)), (5, 3, (1, 2, 2))])
def test_int_negabase(n, b, expected):
    assert int_negabase(n, b) == expected


def test_int_negabase_values():
    for b in (2, 3, 5, 10):
        f = field_from_integer(b)
        for n in range(-300, 301):
            digits = int_negabase(n, b)
            assert all(0 <= d < b for d in digits)
            assert sum(d * (-b) ** k for k, d in enumerate(reversed(digits))) == n
            assert eval_finite(digits, -1, f) == f.from_rational(n)


def test_int_to_base():
    assert int_to_base(6, 2) == (1, 1, 0)
    assert int_to_base(0, 5) == (0,)
    with pytest.raises(ValueError):
        int_to_base(-1, 2)
    with pytest.raises(ValueError):
        int_negabase(3, 1)
