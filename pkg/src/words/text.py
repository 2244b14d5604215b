"""
Text format of words.

Compact form writes one character per digit (``~`` marks a negative digit,
e.g. ``1~10``); digits of absolute value >= 10 force the comma form
(``12,3,-1``). Eventually periodic words are written ``pre(per)`` and may
carry a leading radix point: ``.1(10)``.
"""

from typing import List, Sequence, Union

from src.utils.errors import InvalidWord
from src.words.models import Digit, EpWord, FiniteWord


def _parse_digits(text: str, comma_form: bool) -> List[Digit]:
    if not text:
        return []
    if comma_form:
        try:
            return [int(part.replace("~", "-")) for part in text.split(",") if part != ""]
        except ValueError:
            raise InvalidWord(f"cannot parse digits {text!r}")
    digits: List[Digit] = []
    negative = False
    for ch in text:
        if ch == "~":
            if negative:
                raise InvalidWord(f"doubled sign in {text!r}")
            negative = True
        elif ch.isdigit():
            digits.append(-int(ch) if negative else int(ch))
            negative = False
        else:
            raise InvalidWord(f"unexpected character {ch!r} in {text!r}")
    if negative:
        raise InvalidWord(f"dangling sign in {text!r}")
    return digits


def parse_word(text: str) -> Union[FiniteWord, EpWord]:
    """Parse a finite word or a ``pre(per)`` eventually periodic word."""
    text = text.strip().lstrip(".")
    comma_form = "," in text
    if "(" not in text:
        return tuple(_parse_digits(text, comma_form))
    if not text.endswith(")") or text.count("(") != 1:
        raise InvalidWord(f"malformed periodic word {text!r}")
    pre, per = text[:-1].split("(")
    return EpWord(tuple(_parse_digits(pre.strip(","), comma_form)), tuple(_parse_digits(per, comma_form)))


def parse_radix(text: str) -> tuple:
    """Split ``int.frac`` into two parsed words (either may be empty)."""
    head, _, tail = text.strip().partition(".")
    return parse_word(head), parse_word(tail)


def _format_digits(digits: Sequence[Digit], comma_form: bool) -> str:
    if comma_form:
        return ",".join(str(d) for d in digits)
    return "".join(f"~{-d}" if d < 0 else str(d) for d in digits)


def format_word(w: Union[FiniteWord, EpWord], radix_point: bool = False) -> str:
    if isinstance(w, EpWord):
        digits = w.preperiod + w.period
    else:
        digits = tuple(w)
    comma_form = any(abs(d) >= 10 for d in digits)
    lead = "." if radix_point else ""
    if not isinstance(w, EpWord):
        return lead + _format_digits(digits, comma_form)
    return f"{lead}{_format_digits(w.preperiod, comma_form)}({_format_digits(w.period, comma_form)})"
