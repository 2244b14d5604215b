import sys
from pathlib import Path

import pytest

# Add repository root to path
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from src.config import reset_settings  # noqa: E402
from src.config.loader import clear_config_cache  # noqa: E402
from src.numberfield import field_from_integer, make_field, parse_polynomial  # noqa: E402


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from conf.yaml without NEGABETA_* overrides."""
    for name in ("CONFIG", "ORBIT_CAP", "STATE_CAP", "ENTROPY_TOLERANCE", "LOG_LEVEL"):
        monkeypatch.delenv(f"NEGABETA_{name}", raising=False)
    clear_config_cache()
    reset_settings()
    yield
    clear_config_cache()
    reset_settings()


@pytest.fixture(scope="session")
def golden():
    """X^2 - X - 1"""
    return make_field(parse_polynomial("-1,-1,1"))


@pytest.fixture(scope="session")
def golden_squared():
    """X^2 - 3X + 1"""
    return make_field(parse_polynomial("1,-3,1"))


@pytest.fixture(scope="session")
def silver():
    """X^2 - 2X - 1, beta = 1 + sqrt(2)"""
    return make_field(parse_polynomial("-1,-2,1"))


@pytest.fixture(scope="session")
def sqrt2():
    return make_field(parse_polynomial("-2,0,1"))


@pytest.fixture(scope="session")
def base2():
    return field_from_integer(2)


@pytest.fixture(scope="session")
def base3():
    return field_from_integer(3)
