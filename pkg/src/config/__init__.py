from src.config.loader import load_yaml_config
from src.config.settings import Settings, get_settings, reset_settings

__all__ = [
    "Settings",
    "get_settings",
    "reset_settings",
    "load_yaml_config",
]
