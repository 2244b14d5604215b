"""
Exception hierarchy for the numeration toolkit.

Every error carries a stable ``code`` equal to its class name so the command
line can print it verbatim and scripts can match on it.
"""

from typing import Optional


class NegabetaError(Exception):
    """Root of all domain errors."""

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.__class__.__name__)
        self.details = details

    @property
    def code(self) -> str:
        return self.__class__.__name__

    def __str__(self) -> str:
        return f"{self.code}: {self.args[0]}"


# numberfield

class FieldError(NegabetaError):
    pass


class InvalidPolynomial(FieldError):
    pass


class NotSquarefree(FieldError):
    pass


class ReducibleDetected(FieldError):
    pass


class NoRootAboveOne(FieldError):
    pass


class MultipleRootsAboveOne(FieldError):
    pass


class DivisionByZero(FieldError):
    pass


class NotInvertible(FieldError):
    pass


class RefinementLimit(FieldError):
    """Interval refinement ran out of rounds (never expected for nonzero elements)."""


# words

class WordError(NegabetaError):
    pass


class EmptyPeriod(WordError):
    pass


class LengthMismatch(WordError):
    pass


class InvalidWord(WordError):
    pass


# expansion

class ExpansionError(NegabetaError):
    pass


class OutOfInterval(ExpansionError):
    pass


class CapExceeded(ExpansionError):
    def __init__(self, message: str = "", cap: Optional[int] = None, **details):
        super().__init__(message, cap=cap, **details)
        self.cap = cap


# automata

class AutomatonError(NegabetaError):
    pass


class NotAsmin(AutomatonError):
    pass


class NotAsmax(AutomatonError):
    pass


class EmptyAutomaton(AutomatonError):
    pass


class NoConvergence(AutomatonError):
    pass


# transducers

class TransducerError(NegabetaError):
    pass


class StateCapExceeded(TransducerError):
    def __init__(self, message: str = "", count: Optional[int] = None, **details):
        super().__init__(message, count=count, **details)
        self.count = count


class OutOfDomain(TransducerError):
    pass


class InvalidBlock(TransducerError):
    pass


class ValueOutOfInterval(TransducerError):
    pass


class NoRun(TransducerError):
    """The input word has no accepting path through the machine."""


# cli

class UsageError(NegabetaError):
    pass
