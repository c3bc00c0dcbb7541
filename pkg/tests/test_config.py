import pytest

from config import ConfigError, SweepConfig, load_settings, resolve_config
from generators import GeneratorSpec

ENV_NAMES = ["INPUT", "FORMAT", "BUDGET", "WORKERS", "SEED", "ONLY_FAILS", "LOG_LEVEL"]


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    # setenv first so teardown also removes values that load_dotenv writes
    for name in ENV_NAMES:
        monkeypatch.setenv(f"HIPPCHEN_{name}", "")
        monkeypatch.delenv(f"HIPPCHEN_{name}")
    monkeypatch.chdir(tmp_path)
    return monkeypatch


def test_defaults_validate():
    config = SweepConfig().validate()
    assert (config.budget, config.workers, config.fmt, config.only_fails) == (10**6, 1, "jsonl", False)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"budget": 0},
        {"workers": 0},
        {"fmt": "xml"},
        {"log_level": "LOUD"},
        {"input": "graphs.g6", "generator": GeneratorSpec("tightness")},
        {"generator": GeneratorSpec("tightness", k=0)},
    ],
)
def test_validate_rejects_bad_values(kwargs):
    with pytest.raises(ConfigError):
        SweepConfig(**kwargs).validate()


def test_load_settings_reads_typed_environment(clean_env):
    clean_env.setenv("HIPPCHEN_BUDGET", "500")
    clean_env.setenv("HIPPCHEN_WORKERS", "3")
    clean_env.setenv("HIPPCHEN_ONLY_FAILS", "yes")
    clean_env.setenv("HIPPCHEN_FORMAT", "CSV")
    clean_env.setenv("HIPPCHEN_LOG_LEVEL", "debug")
    assert load_settings() == {"budget": 500, "workers": 3, "only_fails": True, "fmt": "csv", "log_level": "DEBUG"}


def test_load_settings_reads_dotenv_file(clean_env, tmp_path):
    (tmp_path / ".env").write_text("HIPPCHEN_SEED=17\nHIPPCHEN_INPUT=graphs.g6\n")
    settings = load_settings()
    assert settings["seed"] == 17
    assert settings["input"] == "graphs.g6"


@pytest.mark.parametrize("name", ["BUDGET", "WORKERS", "SEED"])
def test_non_integer_values_name_the_variable(clean_env, name):
    clean_env.setenv(f"HIPPCHEN_{name}", "many")
    with pytest.raises(ConfigError, match=f"HIPPCHEN_{name}"):
        load_settings()


def test_bad_boolean(clean_env):
    clean_env.setenv("HIPPCHEN_ONLY_FAILS", "maybe")
    with pytest.raises(ConfigError, match="HIPPCHEN_ONLY_FAILS"):
        load_settings()


def test_flags_override_environment_override_defaults():
    config = resolve_config({"budget": 10, "workers": None}, {"budget": 99, "workers": 4, "fmt": "csv"})
    assert (config.budget, config.workers, config.fmt) == (10, 4, "csv")


def test_generator_flag_replaces_environment_input_and_takes_seed():
    spec = GeneratorSpec("gnp-kconn", n=8, p=0.5, k=2, seed=0)
    config = resolve_config({"generator": spec}, {"input": "graphs.g6", "seed": 5})
    assert config.input is None
    assert config.generator.seed == 5


def test_unknown_setting_is_rejected():
    with pytest.raises(ConfigError):
        resolve_config({"colour": "blue"}, {})
