import logging
import os
from pathlib import Path
from typing import Any, Dict, Union

import yaml

logger = logging.getLogger(__name__)

ENV_PREFIX = "NEGABETA_"


def get_str_env(name: str, default: str = "") -> str:
    val = os.getenv(name)
    return default if val is None else str(val).strip()


def get_int_env(name: str, default: int = 0) -> int:
    val = os.getenv(name)
    if val is None:
        return default
    try:
        return int(val.strip())
    except ValueError:
        logger.warning(f"Invalid integer value for {name}: {val}. Using default {default}.")
        return default


def get_float_env(name: str, default: float = 0.0) -> float:
    val = os.getenv(name)
    if val is None:
        return default
    try:
        return float(val.strip())
    except ValueError:
        logger.warning(f"Invalid float value for {name}: {val}. Using default {default}.")
        return default


def replace_env_vars(value: Any) -> Any:
    """Replace ``$NAME`` string values with the environment variable NAME."""
    if not isinstance(value, str):
        return value
    if value.startswith("$"):
        env_var = value[1:]
        return os.getenv(env_var, env_var)
    return value


def process_dict(config: Dict[str, Any]) -> Dict[str, Any]:
    """Recursively replace environment variable references in a config mapping."""
    if not config:
        return {}
    result = {}
    for key, value in config.items():
        if isinstance(value, dict):
            result[key] = process_dict(value)
        else:
            result[key] = replace_env_vars(value)
    return result


_config_cache: Dict[str, Dict[str, Any]] = {}


def default_config_path() -> Path:
    """conf.yaml at the repository root unless NEGABETA_CONFIG points elsewhere."""
    override = get_str_env(f"{ENV_PREFIX}CONFIG")
    if override:
        return Path(override)
    return Path(__file__).resolve().parents[2] / "conf.yaml"


def load_yaml_config(file_path: Union[str, Path, None] = None) -> Dict[str, Any]:
    """Load and process a YAML configuration file; a missing file yields {}."""
    path = Path(file_path) if file_path is not None else default_config_path()
    key = str(path)

    if key in _config_cache:
        return _config_cache[key]

    if not path.exists():
        logger.debug(f"No configuration file at {path}, using built-in defaults")
        return {}

    with open(path, "r", encoding="utf-8") as f:
        config = yaml.safe_load(f) or {}
    processed_config = process_dict(config)

    _config_cache[key] = processed_config
    return processed_config


def clear_config_cache() -> None:
    _config_cache.clear()
