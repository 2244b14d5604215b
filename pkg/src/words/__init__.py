from src.words.evaluate import eval_ep, eval_finite
from src.words.models import Digit, EpWord, FiniteWord, Order, Word, canonicalize
from src.words.order import alt_compare, complement, is_asmax, is_asmin, short_alt_compare
from src.words.text import format_word, parse_word

__all__ = [
    "Digit",
    "EpWord",
    "FiniteWord",
    "Order",
    "Word",
    "alt_compare",
    "canonicalize",
    "complement",
    "eval_ep",
    "eval_finite",
    "format_word",
    "is_asmax",
    "is_asmin",
    "parse_word",
    "short_alt_compare",
]
