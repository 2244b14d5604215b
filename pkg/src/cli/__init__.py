from src.cli.basespec import BaseMode, BaseSign, BaseSpec, base_spec_from_args
from src.cli.commands import build_parser, parse_element, run

__all__ = [
    "BaseMode",
    "BaseSign",
    "BaseSpec",
    "base_spec_from_args",
    "build_parser",
    "parse_element",
    "run",
]
