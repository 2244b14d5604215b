import random
from fractions import Fraction

import mpmath
import pytest

from src.numberfield import (
    IntPolynomial,
    approx,
    arith,
    ceil_of,
    compare,
    conjugate_abs_bounds,
    conjugate_embeddings,
    conjugates,
    eval_box,
    floor_of,
    fractional_part,
    is_pisot,
    lattice_vector,
    make_field,
    parse_polynomial,
    refine,
    sign,
)
from src.utils.errors import (
    DivisionByZero,
    InvalidPolynomial,
    MultipleRootsAboveOne,
    NoRootAboveOne,
    NotSquarefree,
    ReducibleDetected,
)

GOLDEN = (1 + 5 ** 0.5) / 2


def test_parse_polynomial_drops_trailing_zeros():
    assert parse_polynomial("-1, -1, 1, 0") == IntPolynomial((-1, -1, 1))


@pytest.mark.parametrize("text", ["", "3", "1,x", "0,0"])
def test_parse_polynomial_rejects(text):
    with pytest.raises(InvalidPolynomial):
        parse_polynomial(text)


@pytest.mark.parametrize(
    "coefficients, error",
    [
        ((-1, 2), InvalidPolynomial),
        ((1, -2, 1), NotSquarefree),
        ((-1, 0, 1), ReducibleDetected),
        ((2, 0, 1), NoRootAboveOne),
        ((5, -5, 1), MultipleRootsAboveOne),
        ((-1, 1), NoRootAboveOne),
    ],
)
def test_make_field_validation(coefficients, error):
    with pytest.raises(error):
        make_field(IntPolynomial(coefficients))


def test_root_interval_isolates_beta(golden):
    lo, hi = golden.real_root_interval
    assert abs(float(lo) - GOLDEN) < 1e-15
    assert hi - lo <= Fraction(1, 2 ** 64)
    assert len(golden.conjugate_boxes) == 1


def test_refine_shrinks_interval(golden):
    narrow = refine(golden, Fraction(1, 2 ** 200))
    lo, hi = narrow.real_root_interval
    assert hi - lo <= Fraction(1, 2 ** 200)
    assert narrow == golden


def test_arithmetic_reduces_modulo_min_poly(golden):
    beta = golden.beta()
    assert beta * beta == beta + 1
    assert 1 / beta == beta - 1
    assert beta ** -2 == 2 - beta
    assert arith("div", beta + 1, beta) == beta
    assert arith("sub", beta, beta).is_zero


def test_division_by_zero(golden):
    with pytest.raises(DivisionByZero):
        golden.one() / golden.zero()


def test_integer_base_field(base2):
    assert base2.is_integer_base
    assert base2.beta() == base2.from_rational(2)
    assert base2.beta() ** -3 == base2.from_rational(Fraction(1, 8))


def test_sign_and_floor(golden, golden_squared):
    beta = golden.beta()
    assert sign(beta - 2) == -1
    assert sign(beta - 1) == 1
    assert sign(beta * beta - beta - 1) == 0
    assert compare(beta, Fraction(8, 5)) == 1
    assert floor_of(beta) == 1
    assert ceil_of(beta) == 2
    assert floor_of(golden_squared.beta()) == 2
    assert floor_of(-beta) == -2
    assert fractional_part(beta) == beta - 1


def test_approx_matches_float(golden):
    assert approx(golden.beta()) == pytest.approx(GOLDEN, rel=1e-15)


@pytest.mark.parametrize(
    "text, expected",
    [("-1,-1,1", True), ("1,-3,1", True), ("-1,-1,0,1", True), ("-2,0,1", False), ("1,-1,-1,-1,1", False)],
)
def test_is_pisot(text, expected):
    assert is_pisot(make_field(parse_polynomial(text))) is expected


def test_conjugates(golden, base2):
    (r,) = conjugates(golden)
    assert mpmath.almosteq(r, (1 - mpmath.sqrt(5)) / 2, 1e-40)
    assert conjugates(base2) == ()


def test_conjugate_abs_bounds(golden):
    (bound,) = conjugate_abs_bounds(golden, Fraction(1, 10 ** 6))
    true = (5 ** 0.5 - 1) / 2
    assert true <= float(bound) <= true + 1e-6


def test_conjugate_embeddings(golden):
    x = golden.from_coords([1, 2])
    (value,) = conjugate_embeddings(x)
    assert mpmath.almosteq(value, 1 + 2 * (1 - mpmath.sqrt(5)) / 2, 1e-40)


def test_lattice_vector(golden):
    x = golden.from_coords([Fraction(1, 2), Fraction(1, 3)])
    assert lattice_vector(x).entries == (3, 2)
    assert lattice_vector(x, 12).entries == (6, 4)


def _random_element(rng: random.Random, f, size: int = 50, denominator: int = 20):
    return f.from_coords(Fraction(rng.randint(-size, size), rng.randint(1, denominator)) for _ in range(f.degree))


def _beta_digits(f, dps: int) -> mpmath.mpf:
    """beta to dps digits, as the real root closest to the float value."""
    with mpmath.workdps(dps + 20):
        roots = mpmath.polyroots(list(reversed(f.min_poly.coefficients)), maxsteps=400, extraprec=4 * dps)
        return min((mpmath.re(r) for r in roots if abs(mpmath.im(r)) < 1e-30), key=lambda r: abs(r - approx(f.beta())))


def test_floor_of_large_element(golden):
    x = golden.from_coords([0, 10 ** 30])
    n = floor_of(x)
    assert sign(x - n) >= 0
    assert sign(x - n - 1) < 0
    assert floor_of(golden.from_rational(10 ** 30)) == 10 ** 30


@pytest.mark.parametrize("fixture", ["golden", "golden_squared", "silver"])
def test_floor_invariant(fixture, request):
    f = request.getfixturevalue(fixture)
    rng = random.Random(7)
    for _ in range(200):
        x = _random_element(rng, f, size=10 ** rng.randint(1, 12))
        n = floor_of(x)
        assert sign(x - n) >= 0 and sign(x - n - 1) < 0
        assert ceil_of(x) - n in (0, 1)
        assert sign(fractional_part(x)) >= 0


@pytest.mark.parametrize("text", ["-1,-1,1", "1,-3,1", "-1,-1,0,1"])
def test_ring_laws(text):
    f = make_field(parse_polynomial(text))
    rng = random.Random(3)
    for _ in range(100):
        a, b, c = (_random_element(rng, f) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == f.zero()
        if not a.is_zero:
            assert a * (1 / a) == f.one()
            assert (b / a) * a == b


def test_sign_agrees_with_high_precision():
    rng = random.Random(100)
    fields = [make_field(parse_polynomial(t)) for t in ("-1,-1,1", "1,-3,1", "-1,-1,0,1", "-1,-2,1")]
    betas = [_beta_digits(f, 100) for f in fields]
    with mpmath.workdps(100):
        for k in range(1000):
            f, beta = fields[k % len(fields)], betas[k % len(fields)]
            x = _random_element(rng, f)
            value = mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * beta ** i for i, c in enumerate(x.coords))
            assert sign(x) == (0 if x.is_zero else int(mpmath.sign(value)))


def test_eval_box_encloses_conjugate_value(golden):
    x = golden.from_coords([1, 2])
    (box,) = golden.conjugate_boxes
    (re_lo, im_lo), (re_hi, im_hi) = eval_box(x, box)
    assert re_lo <= 1 + (1 - 5 ** 0.5) <= re_hi
    assert im_lo == im_hi == 0
    assert re_hi - re_lo < Fraction(1, 1000)
