import pytest
from pydantic import ValidationError

from src.config import get_settings, load_yaml_config
from src.config.loader import process_dict, replace_env_vars
from src.config.settings import build_settings


def test_defaults_without_file(tmp_path):
    assert load_yaml_config(tmp_path / "missing.yaml") == {}
    settings = get_settings(tmp_path / "missing.yaml")
    assert settings.expansion.orbit_cap == 100_000
    assert settings.logging.level == "WARNING"


def test_yaml_sections(tmp_path):
    conf = tmp_path / "conf.yaml"
    conf.write_text("EXPANSION:\n  orbit_cap: 7\nlogging:\n  level: debug\n", encoding="utf-8")
    settings = get_settings(conf)
    assert settings.expansion.orbit_cap == 7
    assert settings.logging.level == "DEBUG"
    assert settings.transducers.state_cap == 1_000_000


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("NEGABETA_ORBIT_CAP", "12")
    monkeypatch.setenv("NEGABETA_STATE_CAP", "34")
    monkeypatch.setenv("NEGABETA_ENTROPY_TOLERANCE", "1e-6")
    settings = build_settings({"EXPANSION": {"orbit_cap": 5}})
    assert settings.expansion.orbit_cap == 12
    assert settings.transducers.state_cap == 34
    assert settings.automata.entropy_tolerance == 1e-6


def test_malformed_environment_value_falls_back(monkeypatch):
    monkeypatch.setenv("NEGABETA_ORBIT_CAP", "many")
    assert build_settings({"EXPANSION": {"orbit_cap": 5}}).expansion.orbit_cap == 5


@pytest.mark.parametrize(
    "raw",
    [
        {"LOGGING": {"level": "LOUD"}},
        {"AUTOMATA": {"entropy_tolerance": 2.0}},
        {"EXPANSION": {"orbit_cap": 0}},
    ],
)
def test_invalid_settings(raw):
    with pytest.raises(ValidationError):
        build_settings(raw)


def test_env_references(monkeypatch):
    monkeypatch.setenv("NEGABETA_TEST_LEVEL", "INFO")
    assert replace_env_vars("$NEGABETA_TEST_LEVEL") == "INFO"
    assert replace_env_vars(3) == 3
    assert process_dict({"LOGGING": {"level": "$NEGABETA_TEST_LEVEL"}}) == {"LOGGING": {"level": "INFO"}}
