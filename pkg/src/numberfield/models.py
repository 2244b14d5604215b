"""
Number field data models: integer polynomials, the field Q(beta) and its elements.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from src.utils.errors import DivisionByZero

Rational = Union[int, Fraction]
Interval = Tuple[Fraction, Fraction]
# ((re_lo, im_lo), (re_hi, im_hi))
Box = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients listed constant term first."""

    coefficients: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __call__(self, x: Rational) -> Rational:
        acc: Rational = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def reversed(self) -> "IntPolynomial":
        return IntPolynomial(tuple(reversed(self.coefficients)))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coefficients)


@dataclass(frozen=True)
class LatticeVector:
    entries: Tuple[int, ...]


@dataclass(frozen=True)
class NumberField:
    """
    Q(beta) for an algebraic integer beta > 1 given by its minimal polynomial.

    ``real_root_interval`` isolates beta, ``conjugate_boxes`` isolate the other
    roots (real conjugates get boxes with zero imaginary extent).
    """

    min_poly: IntPolynomial
    real_root_interval: Interval = field(compare=False)
    conjugate_boxes: Tuple[Box, ...] = field(compare=False, default=())
    _tail: Tuple[Fraction, ...] = field(compare=False, repr=False, default=())

    def __post_init__(self):
        if not self._tail:
            # beta^d = -(c_0 + c_1 beta + ... + c_{d-1} beta^{d-1})
            tail = tuple(Fraction(-c) for c in self.min_poly.coefficients[: self.degree])
            object.__setattr__(self, "_tail", tail)

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    @property
    def is_integer_base(self) -> bool:
        return self.degree == 1

    # constructors

    def from_coords(self, coords: Iterable[Rational]) -> "FieldElement":
        return FieldElement(self._reduce(tuple(Fraction(c) for c in coords)), self)

    def from_rational(self, q: Rational) -> "FieldElement":
        return self.from_coords([q])

    from_int = from_rational

    def zero(self) -> "FieldElement":
        return self.from_coords(())

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def beta(self) -> "FieldElement":
        if self.degree == 1:
            return self.from_rational(-self.min_poly.coefficients[0])
        return self.from_coords((0, 1))

    # arithmetic on coordinate tuples

    def _reduce(self, coords: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        d = self.degree
        out = list(coords) + [Fraction(0)] * max(0, d - len(coords))
        for k in range(len(out) - 1, d - 1, -1):
            c = out[k]
            if c:
                for i in range(d):
                    out[k - d + i] += c * self._tail[i]
        return tuple(out[:d])

    def add(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        return FieldElement(tuple(a + b for a, b in zip(x.coords, y.coords)), self)

    def sub(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        return FieldElement(tuple(a - b for a, b in zip(x.coords, y.coords)), self)

    def mul(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        d = self.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(x.coords):
            if not a:
                continue
            for j, b in enumerate(y.coords):
                if b:
                    prod[i + j] += a * b
        return FieldElement(self._reduce(prod), self)

    def div(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        return self.mul(x, self.inverse(y))

    def inverse(self, y: "FieldElement") -> "FieldElement":
        if y.is_zero:
            raise DivisionByZero("division by the zero element")
        if y.is_rational:
            return self.from_rational(1 / y.coords[0])
        if y == self.beta() or y == -self.beta():
            # beta^-1 = -(beta^(d-1) + c_{d-1} beta^(d-2) + ... + c_1) / c_0
            c = self.min_poly.coefficients
            inv = self.from_coords(Fraction(-v, c[0]) for v in c[1:])
            return inv if y == self.beta() else -inv
        from src.numberfield.field import invert_coords

        return FieldElement(invert_coords(self, y.coords), self)

    def times_beta(self, x: "FieldElement") -> "FieldElement":
        return FieldElement(self._reduce((Fraction(0),) + x.coords), self)


@dataclass(frozen=True)
class FieldElement:
    """Exact element sum(coords[i] * beta^i) of Q(beta)."""

    coords: Tuple[Fraction, ...]
    field: NumberField = field(compare=False, repr=False, hash=False)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def _lift(self, other: Union["FieldElement", Rational]) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        return self.field.from_rational(other)

    def __add__(self, other):
        return self.field.add(self, self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field.sub(self, self._lift(other))

    def __rsub__(self, other):
        return self.field.sub(self._lift(other), self)

    def __neg__(self):
        return FieldElement(tuple(-c for c in self.coords), self.field)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(tuple(c * other for c in self.coords), self.field)
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return FieldElement(tuple(c / other for c in self.coords), self.field)
        return self.field.div(self, other)

    def __rtruediv__(self, other):
        return self.field.div(self._lift(other), self)

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.field.inverse(self) ** (-n)
        result, base = self.field.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"
