"""
Construction and global properties of Q(beta): validation of the minimal
polynomial, root isolation, conjugate bounds and the Pisot test.

Root isolation and refinement are delegated to sympy; everything returned to
the caller is an exact ``fractions.Fraction``.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import mpmath
import sympy
from sympy.polys.polyerrors import NotInvertible as SympyNotInvertible
from sympy.polys.polyerrors import PolynomialError

from src.config import get_settings
from src.numberfield.models import Box, FieldElement, IntPolynomial, Interval, LatticeVector, NumberField, Rational
from src.utils.errors import (
    FieldError,
    InvalidPolynomial,
    MultipleRootsAboveOne,
    NoRootAboveOne,
    NotInvertible,
    NotSquarefree,
    ReducibleDetected,
    RefinementLimit,
)

logger = logging.getLogger(__name__)

_X = sympy.Symbol("X")


def _to_fraction(r) -> Fraction:
    r = sympy.Rational(r)
    return Fraction(int(r.p), int(r.q))


def _to_rational(q: Rational) -> sympy.Rational:
    q = Fraction(q)
    return sympy.Rational(q.numerator, q.denominator)


def to_sympy(poly: IntPolynomial, domain: str = "ZZ") -> sympy.Poly:
    return sympy.Poly(list(reversed(poly.coefficients)), _X, domain=domain)


def parse_polynomial(text: str) -> IntPolynomial:
    """
    Parse ``"c0,c1,...,cd"`` (constant term first) into an IntPolynomial.

    Args:
        text: comma separated integer coefficients, e.g. ``-1,-1,1`` for X^2-X-1

    Returns:
        The polynomial with trailing zero coefficients removed
    """
    try:
        coefficients = [int(part) for part in text.replace(" ", "").split(",") if part != ""]
    except ValueError:
        raise InvalidPolynomial(f"cannot parse polynomial {text!r}")
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    if len(coefficients) < 2:
        raise InvalidPolynomial(f"polynomial {text!r} has degree < 1")
    return IntPolynomial(tuple(coefficients))


def _validate(poly: IntPolynomial) -> None:
    if poly.degree < 1:
        raise InvalidPolynomial(f"degree of {poly} is < 1")
    if not poly.is_monic:
        raise InvalidPolynomial(f"{poly} is not monic")
    if poly.degree == 1:
        return
    p = to_sympy(poly)
    if not p.is_sqf:
        raise NotSquarefree(f"{poly} shares a factor with its derivative")
    a0 = poly.coefficients[0]
    candidates = [0] if a0 == 0 else sympy.divisors(abs(a0))
    for r in candidates:
        for root in {r, -r}:
            if poly(root) == 0:
                raise ReducibleDetected(f"{poly} has the rational root {root}")
    if not p.is_irreducible:
        raise ReducibleDetected(f"{poly} factors over the integers")


def make_field(poly: IntPolynomial, precision_bits: Optional[int] = None) -> NumberField:
    """
    Validate a monic minimal polynomial and isolate its roots.

    Args:
        poly: monic integer polynomial of degree >= 1
        precision_bits: width 2^-bits of the isolating interval of beta

    Returns:
        NumberField whose real_root_interval isolates the unique root beta > 1
    """
    _validate(poly)
    bits = precision_bits or get_settings().numberfield.initial_precision_bits

    if poly.degree == 1:
        b = Fraction(-poly.coefficients[0])
        if b <= 1:
            raise NoRootAboveOne(f"the root {b} of {poly} is not > 1")
        return NumberField(poly, (b, b), ())

    p = to_sympy(poly)
    above_one = p.count_roots(1, None)
    if above_one == 0:
        raise NoRootAboveOne(f"{poly} has no real root > 1")
    if above_one > 1:
        raise MultipleRootsAboveOne(f"{poly} has {above_one} real roots > 1")

    interval, boxes = _isolate(poly, Fraction(1, 2 ** 16))
    interval = refine_interval(poly, interval, bits)
    logger.debug(f"isolated beta of {poly} in [{float(interval[0])}, {float(interval[1])}]")
    return NumberField(poly, interval, boxes)


def field_from_integer(b: int) -> NumberField:
    return make_field(IntPolynomial((-b, 1)))


def _isolate(poly: IntPolynomial, eps: Fraction) -> Tuple[Interval, Tuple[Box, ...]]:
    """Isolating interval of beta and boxes of the remaining roots, all of width < eps."""
    real, complex_ = to_sympy(poly).intervals(all=True, eps=_to_rational(eps))
    intervals = [(_to_fraction(s), _to_fraction(t)) for (s, t), _ in real]
    # beta is the largest real root
    beta = intervals.pop()
    bits = 16
    while beta[0] <= 1:
        bits *= 2
        beta = refine_interval(poly, beta, bits)
    boxes: List[Box] = [((s, Fraction(0)), (t, Fraction(0))) for s, t in intervals]
    for (lo, hi), _ in complex_:
        lo_re, lo_im = lo.as_real_imag()
        hi_re, hi_im = hi.as_real_imag()
        boxes.append(
            ((_to_fraction(lo_re), _to_fraction(lo_im)), (_to_fraction(hi_re), _to_fraction(hi_im)))
        )
    if len(boxes) + 1 != poly.degree:
        raise FieldError(f"root isolation of {poly} returned {len(boxes) + 1} roots")
    return beta, tuple(boxes)


@lru_cache(maxsize=512)
def refine_interval(poly: IntPolynomial, interval: Interval, bits: int) -> Interval:
    """Shrink an isolating interval of a real root of poly to width <= 2^-bits."""
    s, t = interval
    if s == t or t - s <= Fraction(1, 2 ** bits):
        return interval
    rs, rt = to_sympy(poly).refine_root(_to_rational(s), _to_rational(t), eps=sympy.Rational(1, 2 ** bits))
    return _to_fraction(rs), _to_fraction(rt)


def refine(f: NumberField, width: Rational) -> NumberField:
    """A copy of f whose real_root_interval has width <= width."""
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    bits = max(1, math.ceil(math.log2(1 / width)) + 1)
    return NumberField(f.min_poly, refine_interval(f.min_poly, f.real_root_interval, bits), f.conjugate_boxes)


def invert_coords(f: NumberField, coords: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Inverse of sum(coords[i] beta^i) modulo the minimal polynomial."""
    x = sympy.Poly([_to_rational(c) for c in reversed(coords)], _X, domain="QQ")
    try:
        inv = x.invert(to_sympy(f.min_poly, domain="QQ"))
    except SympyNotInvertible:
        raise NotInvertible(f"{list(coords)} is a zero divisor modulo {f.min_poly}")
    except PolynomialError as e:
        raise InvalidPolynomial(str(e))
    values = [_to_fraction(c) for c in reversed(inv.all_coeffs())]
    return tuple(values + [Fraction(0)] * (f.degree - len(values)))


def arith(op: str, x: FieldElement, y: FieldElement) -> FieldElement:
    """Dispatch ``add``/``sub``/``mul``/``div`` on two elements of the same field."""
    f = x.field
    operations = {"add": f.add, "sub": f.sub, "mul": f.mul, "div": f.div}
    if op not in operations:
        raise ValueError(f"unknown field operation {op!r}")
    return operations[op](x, y)


def modulus_squared_range(box: Box) -> Tuple[Fraction, Fraction]:
    (re_lo, im_lo), (re_hi, im_hi) = box

    def closest(lo: Fraction, hi: Fraction) -> Fraction:
        return Fraction(0) if lo <= 0 <= hi else min(abs(lo), abs(hi))

    low = closest(re_lo, re_hi) ** 2 + closest(im_lo, im_hi) ** 2
    high = max(re_lo * re_lo, re_hi * re_hi) + max(im_lo * im_lo, im_hi * im_hi)
    return low, high


def _sqrt_upper(q: Fraction, eps: Fraction) -> Fraction:
    """A rational r with sqrt(q) <= r <= sqrt(q) + eps."""
    scale = math.ceil(2 / eps)
    root = math.isqrt(q.numerator * scale * scale // q.denominator)
    return Fraction(root + 1, scale)


def _interval_product(a: Interval, b: Interval) -> Interval:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(products), max(products)


def eval_box(x: FieldElement, box: Box) -> Box:
    """Rational enclosure of x at every point of a complex box, by Horner's rule."""
    (re_lo, im_lo), (re_hi, im_hi) = box
    zr, zi = (re_lo, re_hi), (im_lo, im_hi)
    ar = ai = (Fraction(0), Fraction(0))
    for c in reversed(x.coords):
        rr, ii = _interval_product(ar, zr), _interval_product(ai, zi)
        ri, ir = _interval_product(ar, zi), _interval_product(ai, zr)
        ar = (rr[0] - ii[1] + c, rr[1] - ii[0] + c)
        ai = (ri[0] + ir[0], ri[1] + ir[1])
    return (ar[0], ai[0]), (ar[1], ai[1])


def conjugate_boxes(f: NumberField, eps: Rational) -> Tuple[Box, ...]:
    if f.degree == 1:
        return ()
    _, boxes = _isolate(f.min_poly, Fraction(eps))
    return boxes


def conjugate_abs_bounds(f: NumberField, eps: Rational = Fraction(1, 10 ** 6)) -> List[Fraction]:
    """
    Rational upper bounds on the moduli of the conjugates of beta.

    Args:
        f: the field
        eps: maximal excess of each bound over the true modulus

    Returns:
        One bound per conjugate box, in the order of ``conjugate_boxes``
    """
    eps = Fraction(eps)
    bounds = []
    for box in conjugate_boxes(f, eps / 4):
        _, high = modulus_squared_range(box)
        bounds.append(_sqrt_upper(high, eps / 2))
    return bounds


def _is_reciprocal(poly: IntPolynomial) -> bool:
    c = poly.coefficients
    return c == tuple(reversed(c)) or c == tuple(-v for v in reversed(c))


def is_pisot(f: NumberField) -> bool:
    """True iff every conjugate of beta lies strictly inside the unit disc."""
    if f.degree == 1:
        return True
    # irreducible reciprocal polynomials of degree >= 3 pair each conjugate z with 1/z
    if f.degree >= 3 and _is_reciprocal(f.min_poly):
        return False
    eps = Fraction(1, 16)
    for _ in range(get_settings().numberfield.max_refinements):
        undecided = False
        for box in conjugate_boxes(f, eps):
            low, high = modulus_squared_range(box)
            if low >= 1:
                return False
            if high >= 1:
                undecided = True
        if not undecided:
            return True
        eps /= 16
    raise RefinementLimit(f"could not separate the conjugates of {f.min_poly} from the unit circle")


def lattice_vector(x: FieldElement, q: Optional[int] = None) -> LatticeVector:
    """
    Integer coordinates q * x over the power basis.

    Args:
        x: element of Q(beta)
        q: common denominator; defaults to the least one

    Returns:
        LatticeVector with exactly ``degree`` entries
    """
    if q is None:
        q = 1
        for c in x.coords:
            q = q * c.denominator // math.gcd(q, c.denominator)
    scaled = [c * q for c in x.coords]
    if any(v.denominator != 1 for v in scaled):
        raise FieldError(f"{q} does not clear the denominators of {x}")
    return LatticeVector(tuple(int(v) for v in scaled))


def _mp_roots(poly: IntPolynomial, dps: int) -> List[mpmath.mpc]:
    with mpmath.workdps(dps):
        return list(mpmath.polyroots(list(reversed(poly.coefficients)), maxsteps=200, extraprec=4 * dps))


@lru_cache(maxsize=64)
def conjugates(f: NumberField, dps: int = 50) -> Tuple[mpmath.mpc, ...]:
    """The conjugates of beta other than beta itself, to ``dps`` digits."""
    if f.degree == 1:
        return ()
    mid = (f.real_root_interval[0] + f.real_root_interval[1]) / 2
    roots = _mp_roots(f.min_poly, dps)
    with mpmath.workdps(dps):
        target = mpmath.mpf(mid.numerator) / mid.denominator
        beta_index = min(range(len(roots)), key=lambda i: abs(roots[i] - target))
    return tuple(r for i, r in enumerate(roots) if i != beta_index)


def conjugate_embeddings(x: FieldElement, dps: int = 50) -> List[mpmath.mpc]:
    """High precision values of x at every conjugate of beta (beta itself excluded)."""
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c.numerator) / c.denominator for c in reversed(x.coords)]
        return [mpmath.polyval(coeffs, r) for r in conjugates(x.field, dps)]
