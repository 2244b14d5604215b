"""
Subcommands of the command line. Each ``cmd_*`` function takes the parsed
arguments and returns the text written to stdout.
"""

import argparse
import logging
import math
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.automata import (
    ShiftKind,
    beta_shift_automaton,
    build_shift_automaton,
    classify,
    cover,
    entropy,
)
from src.automata import export as automaton_export
from src.cli import acceptance
from src.cli.approx import approx_delay, approx_digits
from src.cli.basespec import BaseSpec, base_spec_from_args
from src.config import get_settings, reset_settings
from src.config.loader import ENV_PREFIX, clear_config_cache
from src.expansion import beta_orbit_expansion, d_beta, d_minus_beta, int_negabase, orbit_expansion
from src.numberfield import approx, floor_of
from src.numberfield.models import FieldElement, NumberField
from src.transducers import (
    build_normalization_transducer,
    convert_int,
    convert_neg_to_pos,
    convert_quadratic,
    normalize,
    normalize_with_transducer,
    online_convert,
    online_delay,
)
from src.utils.errors import CapExceeded, InvalidWord, NegabetaError, UsageError
from src.words import EpWord, format_word, parse_word
from src.words.text import parse_radix

logger = logging.getLogger(__name__)


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read {text!r} as a number") from None


def parse_element(text: str, f: NumberField) -> FieldElement:
    """``p/q``, a decimal, or power basis coordinates ``[c0,c1,...]`` / ``c0,c1,...``."""
    text = text.strip()
    if text.startswith("[") or "," in text:
        return f.from_coords(parse_fraction(c) for c in text.strip("[]").split(","))
    return f.from_rational(parse_fraction(text))


def _digit_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(d) for d in text.split(","))
    except ValueError:
        raise UsageError(f"cannot read {text!r} as comma separated digits") from None


def _as_ep(text: str) -> EpWord:
    w = parse_word(text)
    return w if isinstance(w, EpWord) else EpWord(w, (0,))


def _require_negative(spec: BaseSpec, command: str) -> None:
    if spec.base_sign > 0:
        raise UsageError(f"{command} works in base -beta; use --base or --base-neg-poly")


def cmd_expand(args) -> str:
    spec = base_spec_from_args(args)
    if not spec.is_exact:
        if args.n is None:
            raise UsageError("an approximate base needs -n")
        return format_word(approx_digits(spec.approximate_beta, parse_fraction(args.x), args.n, spec.base_sign))
    f = spec.field()
    x = parse_element(args.x, f)
    if args.n is not None:
        digits = d_minus_beta(x, args.n) if spec.base_sign < 0 else d_beta(x, args.n)
        return format_word(digits)
    result = orbit_expansion(x, args.cap) if spec.base_sign < 0 else beta_orbit_expansion(x, args.cap)
    if not result.is_periodic:
        raise CapExceeded(f"no period within {len(result.points)} steps; use -n", cap=len(result.points))
    return format_word(result.digits)


def cmd_intconvert(args) -> str:
    if args.base is None or args.base < 2:
        raise UsageError("intconvert needs --base b with b >= 2")
    digits = convert_int(args.n_value, args.base) if args.n_value >= 0 else int_negabase(args.n_value, args.base)
    return format_word(digits)


def cmd_classify(args) -> str:
    spec = base_spec_from_args(args)
    _require_negative(spec, "classify")
    result = classify(spec.field(), args.cap)
    if result.kind == ShiftKind.FINITE_TYPE:
        forbidden = ",".join(sorted(format_word(w) for w in result.forbidden_factors))
        return f"{result.kind.value}; forbidden: {forbidden}"
    return result.kind.value


def _shift_automaton(spec: BaseSpec, cap: Optional[int]):
    f = spec.field()
    return build_shift_automaton(f, cap) if spec.base_sign < 0 else beta_shift_automaton(f, cap)


def cmd_automaton(args) -> str:
    a = _shift_automaton(base_spec_from_args(args), args.cap)
    if args.cover:
        a = cover(a)
    if args.dot:
        return automaton_export.to_dot(a).rstrip("\n")
    return automaton_export.to_document(a).model_dump_json(indent=2)


def cmd_normalize(args) -> str:
    spec = base_spec_from_args(args)
    _require_negative(spec, "normalize")
    f = spec.field()
    w = _as_ep(args.word)
    if args.output_alphabet is not None:
        outputs = _digit_list(args.output_alphabet)
        c = args.alphabet_bound
        if c is None:
            c = max(floor_of(f.beta()), *outputs, *(abs(d) for d in w.digits()))
        try:
            t = build_normalization_transducer(f, c, None, outputs)
        except ValueError as e:
            raise UsageError(str(e)) from None
        return format_word(normalize_with_transducer(t, w))
    try:
        return format_word(normalize(f, w, args.alphabet_bound))
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_online(args) -> str:
    spec = base_spec_from_args(args)
    if not spec.is_exact:
        if not args.delay:
            raise UsageError("an approximate base only supports --delay")
        return str(approx_delay(spec.approximate_beta))
    f = spec.field()
    if args.delay:
        return str(online_delay(f))
    if args.word is None or args.n is None:
        raise UsageError("online needs a base beta word and -n")
    return format_word(online_convert(f, _as_ep(args.word), args.n))


def cmd_entropy(args) -> str:
    spec = base_spec_from_args(args)
    a = _shift_automaton(spec, args.cap)
    h = entropy(a)
    log_beta = math.log(approx(spec.field().beta()))
    return f"entropy {h:.12f}\nlog_beta {log_beta:.12f}"


def cmd_convert(args) -> str:
    spec = base_spec_from_args(args)
    _require_negative(spec, "convert")
    return format_word(convert_neg_to_pos(spec.field(), _as_ep(args.word)))


def cmd_quadratic(args) -> str:
    head, tail = parse_radix(args.word)
    if isinstance(head, EpWord) or len(head) > 1:
        raise InvalidWord("the integer part is a single digit x_0")
    fraction = tail if isinstance(tail, EpWord) else EpWord(tail, (0,))
    try:
        y0, rest = convert_quadratic(args.a, head[0] if head else 0, fraction)
    except ValueError as e:
        raise UsageError(str(e)) from None
    return f"{y0}.{format_word(rest)}"


class SelftestFailed(NegabetaError):
    pass


def _selftest_cases() -> List[Tuple[str, Sequence[str], str]]:
    return [
        ("<6>_{-2}", ["intconvert", "6", "--base", "2"], "11010"),
        ("<3>_{-2}", ["intconvert", "3", "--base", "2"], "111"),
        ("<4>_{-2}", ["intconvert", "4", "--base", "2"], "100"),
        ("golden mean shift is sofic", ["classify", "--base-neg-poly", "-1,-1,1"], "sofic"),
        ("G^2 shift forbids 20", ["classify", "--base-neg-poly", "1,-3,1"], "finite-type; forbidden: 20"),
        ("expansion of 0", ["expand", "0", "--base-neg-poly", "-1,-1,1", "-n", "5"], "00000"),
        ("left endpoint of the golden mean", ["expand", "[1,-1]", "--base-neg-poly", "-1,-1,1"], "1(0)"),
        ("on-line delay of G", ["online", "--delay", "--base-neg-poly", "-1,-1,1"], "4"),
        ("on-line delay of base 2", ["online", "--delay", "--base", "2"], "2"),
        ("quadratic converter", ["quadratic", "1", "1.(0)"], "1.(0)"),
        ("normalization in base -2", ["normalize", ".0(01)", "--base", "2"], "1(2)"),
        ("conversion to base 2", ["convert", "0(0)", "--base", "2"], "(0)"),
    ]


def cmd_selftest(args) -> str:
    """Golden command lines, then the acceptance checks unless --quick."""
    lines = []
    passed = 0
    cases = _selftest_cases()
    for name, argv, expected in cases:
        try:
            parsed = build_parser().parse_args(list(argv))
            got = parsed.handler(parsed)
        except NegabetaError as e:
            got = f"error: {e}"
        ok = got == expected
        passed += ok
        lines.append(f"[{'✓' if ok else '✗'}] {name}" + ("" if ok else f": expected {expected!r}, got {got!r}"))
    checks = [] if args.quick else acceptance.CHECKS
    for check in checks:
        logger.info(f"acceptance check: {check.name}")
        try:
            check.run()
            ok = True
        except NegabetaError as e:
            ok = False
            lines.append(f"[✗] {check.name}: {e}")
        passed += ok
        if ok:
            lines.append(f"[✓] {check.name}")
    total = len(cases) + len(checks)
    lines.append(f"{passed}/{total} passed")
    if passed != total:
        raise SelftestFailed("\n".join(lines))
    return "\n".join(lines)


def _add_base_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--base", type=int, help="integer base b (the base is -b unless --positive)")
    p.add_argument("--base-neg-poly", help="minimal polynomial of beta, constant term first; base -beta")
    p.add_argument("--base-pos-poly", help="minimal polynomial of beta, constant term first; base beta")
    p.add_argument("--base-float", help="decimal approximation of beta (approximate results)")
    p.add_argument("--positive", action="store_true", help="use base b or beta instead of its negative")
    p.add_argument("--cap", type=int, help="orbit cap (defaults to the configured orbit_cap)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negabeta",
        description="Negative base numeration: expansions, shifts, conversions and normalization",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
examples:
  python main.py intconvert 6 --base 2
  python main.py classify --base-neg-poly 1,-3,1
  python main.py automaton --base-neg-poly -1,-1,1 --dot
  python main.py online --delay --base-neg-poly -1,-1,1
        """,
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    parser.add_argument("--config", help="YAML configuration file (default: conf.yaml)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="digits of x in base -beta or beta")
    p.add_argument("x", help="p/q, a decimal, or coordinates [c0,c1,...] over the power basis")
    p.add_argument("-n", type=int, help="number of digits; the eventually periodic expansion when omitted")
    _add_base_flags(p)
    p.set_defaults(handler=cmd_expand)

    p = sub.add_parser("intconvert", help="<n>_{-b} through the right sequential transducer")
    p.add_argument("n_value", type=int, metavar="n")
    p.add_argument("--base", type=int, required=True, help="b >= 2")
    p.set_defaults(handler=cmd_intconvert)

    p = sub.add_parser("classify", help="finite type / sofic verdict for the (-beta)-shift")
    _add_base_flags(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("automaton", help="minimal automaton of the shift")
    _add_base_flags(p)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="DOT output")
    fmt.add_argument("--json", action="store_true", help="JSON document (default)")
    p.add_argument("--cover", action="store_true", help="keep only the terminal strongly connected part")
    p.set_defaults(handler=cmd_automaton)

    p = sub.add_parser("normalize", help="admissible (-beta)-expansion of a word over {-c..c}")
    p.add_argument("word", help="pre(per), ~ marks negative digits")
    p.add_argument("--alphabet-bound", type=int, help="c; defaults to the largest digit or floor(beta)")
    p.add_argument("--output-alphabet", help="comma separated output digits, transducer path only")
    _add_base_flags(p)
    p.set_defaults(handler=cmd_normalize)

    p = sub.add_parser("online", help="on-line conversion from base beta to base -beta")
    p.add_argument("word", nargs="?", help="base beta digits x_1 x_2 ..., pre(per) allowed")
    p.add_argument("-n", type=int, help="number of output digits")
    p.add_argument("--delay", action="store_true", help="print the delay only")
    _add_base_flags(p)
    p.set_defaults(handler=cmd_online)

    p = sub.add_parser("entropy", help="entropy of the shift next to log(beta)")
    _add_base_flags(p)
    p.set_defaults(handler=cmd_entropy)

    p = sub.add_parser("convert", help="(-beta)-expansion to beta-expansion")
    p.add_argument("word", help="admissible (-beta)-expansion, pre(per)")
    _add_base_flags(p)
    p.set_defaults(handler=cmd_convert)

    p = sub.add_parser("quadratic", help="base beta to base -beta when beta^2 = a beta + 1")
    p.add_argument("a", type=int)
    p.add_argument("word", help="x0.x1x2...(period)")
    p.set_defaults(handler=cmd_quadratic)

    p = sub.add_parser("selftest", help="golden examples and the acceptance checks")
    p.add_argument("--quick", action="store_true", help="golden examples only")
    p.set_defaults(handler=cmd_selftest)
    return parser


def _configure(args) -> None:
    if args.config:
        os.environ[f"{ENV_PREFIX}CONFIG"] = args.config
        clear_config_cache()
        reset_settings()
    level = get_settings().logging.level
    if args.verbose:
        level = "DEBUG" if args.verbose > 1 else "INFO"
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Execute one subcommand.

    Returns:
        0 on success, 1 on a domain error, 2 on a usage error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    _configure(args)
    try:
        print(args.handler(args))
    except UsageError as e:
        print(f"usage error: {e.args[0]}", file=sys.stderr)
        return 2
    except NegabetaError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0
