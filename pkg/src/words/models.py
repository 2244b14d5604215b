"""
Digit words: finite words and eventually periodic infinite words.
"""

from dataclasses import dataclass
from enum import IntEnum
from typing import Tuple, Union

from src.utils.errors import EmptyPeriod

Digit = int
FiniteWord = Tuple[Digit, ...]


class Order(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class EpWord:
    """The infinite word preperiod . period^omega (digits most significant first)."""

    preperiod: FiniteWord
    period: FiniteWord

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise EmptyPeriod("eventually periodic word with an empty period")

    @property
    def m(self) -> int:
        return len(self.preperiod)

    @property
    def p(self) -> int:
        return len(self.period)

    @property
    def is_purely_periodic(self) -> bool:
        return not self.preperiod

    def digit(self, i: int) -> Digit:
        """Digit at 0-based position i."""
        if i < self.m:
            return self.preperiod[i]
        return self.period[(i - self.m) % self.p]

    def prefix(self, n: int) -> FiniteWord:
        return tuple(self.digit(i) for i in range(n))

    def shift(self, n: int = 1) -> "EpWord":
        """sigma^n of the word (not canonicalized)."""
        if n <= self.m:
            return EpWord(self.preperiod[n:], self.period)
        r = (n - self.m) % self.p
        return EpWord((), self.period[r:] + self.period[:r])

    def digits(self) -> FiniteWord:
        return self.preperiod + self.period

    def __str__(self) -> str:
        from src.words.text import format_word

        return format_word(self)


Word = Union[FiniteWord, EpWord]


def canonicalize(w: EpWord) -> EpWord:
    """Primitive period and shortest preperiod; idempotent."""
    period = w.period
    n = len(period)
    for q in range(1, n + 1):
        if n % q == 0 and period[:q] * (n // q) == period:
            period = period[:q]
            break
    pre = w.preperiod
    while pre and pre[-1] == period[-1]:
        pre = pre[:-1]
        period = period[-1:] + period[:-1]
    return EpWord(pre, period)
