"""
Runtime settings: conf.yaml merged with NEGABETA_* environment overrides.
"""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional, Union

from pydantic import BaseModel, Field, field_validator

from src.config.loader import ENV_PREFIX, get_float_env, get_int_env, get_str_env, load_yaml_config

logger = logging.getLogger(__name__)

_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG", "NOTSET")


class NumberFieldSettings(BaseModel):
    max_refinements: int = Field(4096, gt=0, description="Hard cap on interval refinement rounds")
    initial_precision_bits: int = Field(64, gt=0, description="Width 2^-bits of the first root interval")


class ExpansionSettings(BaseModel):
    orbit_cap: int = Field(100_000, gt=0, description="Maximum orbit length before CapExceeded")


class AutomataSettings(BaseModel):
    entropy_tolerance: float = Field(1e-12, description="Relative tolerance of the power iteration")
    entropy_max_iterations: int = Field(1_000_000, gt=0, description="Power iteration cap")

    @field_validator("entropy_tolerance")
    @classmethod
    def _tolerance_in_unit_interval(cls, v: float) -> float:
        if not 0 < v < 1:
            raise ValueError("entropy_tolerance must lie in (0, 1)")
        return v


class TransducerSettings(BaseModel):
    state_cap: int = Field(1_000_000, gt=0, description="Maximum explored states of a transducer")


class LoggingSettings(BaseModel):
    level: str = Field("WARNING", description="Root log level for the command line")

    @field_validator("level")
    @classmethod
    def _known_level(cls, v: str) -> str:
        v = v.upper()
        if v not in _LEVELS:
            raise ValueError(f"unknown log level {v}")
        return v


class Settings(BaseModel):
    numberfield: NumberFieldSettings = Field(default_factory=NumberFieldSettings)
    expansion: ExpansionSettings = Field(default_factory=ExpansionSettings)
    automata: AutomataSettings = Field(default_factory=AutomataSettings)
    transducers: TransducerSettings = Field(default_factory=TransducerSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)


def _section(raw: Dict[str, Any], name: str) -> Dict[str, Any]:
    return dict(raw.get(name.upper()) or raw.get(name) or {})


def build_settings(raw: Dict[str, Any]) -> Settings:
    """Validate a raw YAML mapping and apply environment overrides on top."""
    expansion = _section(raw, "expansion")
    expansion["orbit_cap"] = get_int_env(f"{ENV_PREFIX}ORBIT_CAP", expansion.get("orbit_cap", 100_000))

    transducers = _section(raw, "transducers")
    transducers["state_cap"] = get_int_env(f"{ENV_PREFIX}STATE_CAP", transducers.get("state_cap", 1_000_000))

    automata = _section(raw, "automata")
    automata["entropy_tolerance"] = get_float_env(
        f"{ENV_PREFIX}ENTROPY_TOLERANCE", automata.get("entropy_tolerance", 1e-12)
    )

    log = _section(raw, "logging")
    log["level"] = get_str_env(f"{ENV_PREFIX}LOG_LEVEL", log.get("level", "WARNING"))

    return Settings(
        numberfield=NumberFieldSettings(**_section(raw, "numberfield")),
        expansion=ExpansionSettings(**expansion),
        automata=AutomataSettings(**automata),
        transducers=TransducerSettings(**transducers),
        logging=LoggingSettings(**log),
    )


@lru_cache(maxsize=None)
def _cached(path: Optional[str]) -> Settings:
    return build_settings(load_yaml_config(path))


def get_settings(path: Union[str, Path, None] = None) -> Settings:
    return _cached(str(path) if path is not None else None)


def reset_settings() -> None:
    """Forget cached settings (tests change the environment between cases)."""
    _cached.cache_clear()
