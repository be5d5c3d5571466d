import pytest

from gaussian_ideals.config import load_config

_NAMES = ("GAUSS_FIELD", "GAUSS_MAX_REDUCTIONS", "GAUSS_SCENARIO_TIMEOUT", "GAUSS_WORKERS", "GAUSS_ENUMERATION_LIMIT")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for name in _NAMES:
        monkeypatch.delenv(name, raising=False)


def test_defaults():
    config = load_config()
    assert config.default_field == "gf:32003"
    assert config.max_reductions == 10_000_000
    assert config.scenario_timeout_seconds == 120.0
    assert config.enumeration_limit == 2_000_000
    assert config.workers == 1


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("GAUSS_FIELD", " q ")
    monkeypatch.setenv("GAUSS_WORKERS", "4")
    monkeypatch.setenv("GAUSS_SCENARIO_TIMEOUT", "2.5")
    config = load_config()
    assert config.default_field == "q"
    assert config.workers == 4
    assert config.scenario_timeout_seconds == 2.5


@pytest.mark.parametrize("name,value", [
    ("GAUSS_FIELD", "  "),
    ("GAUSS_WORKERS", "0"),
    ("GAUSS_WORKERS", "-2"),
    ("GAUSS_MAX_REDUCTIONS", "lots"),
    ("GAUSS_SCENARIO_TIMEOUT", "soon"),
])
def test_invalid_values(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ValueError):
        load_config()
