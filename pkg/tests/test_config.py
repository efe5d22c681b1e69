import pytest

from src.config import THREADS_ENV_VAR, RunConfig, apply_env_overrides, load_config
from src.errors import ConfigError


def test_defaults():
    config = RunConfig()
    assert (config.depth, config.coeff_prec, config.constant_prec) == (3, 4, 33)
    assert not config.short_circuit


def test_missing_file_uses_defaults(tmp_path):
    assert load_config(tmp_path / "missing.yaml") == RunConfig()
    assert load_config(None) == RunConfig()


def test_load_config(tmp_path):
    path = tmp_path / "checker_config.yaml"
    path.write_text("run:\n  depth: 2\n  threads: 8\n  short_circuit: true\n")
    config = load_config(path)
    assert config.depth == 2
    assert config.threads == 8
    assert config.short_circuit
    assert config.coeff_prec == 4


def test_empty_file(tmp_path):
    path = tmp_path / "checker_config.yaml"
    path.write_text("")
    assert load_config(path) == RunConfig()


def test_unknown_key(tmp_path):
    path = tmp_path / "checker_config.yaml"
    path.write_text("run:\n  depht: 2\n")
    with pytest.raises(ConfigError, match="depht"):
        load_config(path)


@pytest.mark.parametrize(
    "settings",
    [{"depth": 0}, {"coeff_prec": 1}, {"coeff_prec": 10, "constant_prec": 5}, {"threads": 0}],
)
def test_invalid_values(settings):
    with pytest.raises(ConfigError):
        RunConfig(**settings)


def test_with_overrides_ignores_none():
    config = RunConfig().with_overrides(depth=None, coeff_prec=6)
    assert config.depth == 3
    assert config.coeff_prec == 6


def test_env_override(monkeypatch):
    monkeypatch.setenv(THREADS_ENV_VAR, "2")
    assert apply_env_overrides(RunConfig()).threads == 2


def test_env_override_must_be_integer(monkeypatch):
    monkeypatch.setenv(THREADS_ENV_VAR, "many")
    with pytest.raises(ConfigError):
        apply_env_overrides(RunConfig())


def test_no_env_override(monkeypatch):
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
    assert apply_env_overrides(RunConfig()) == RunConfig()
