import logging
from pathlib import Path

import pytest
from pydantic import ValidationError

from netmend.cli.run import build_run_config, load_config_file
from netmend.core.config import Settings
from netmend.core.exceptions import ConfigError
from netmend.core.logging import configure_logging
from netmend.utils.numeric import from_cents, to_cents


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in ("NETMEND_OUT", "NETMEND_DEFAULT_TRUST", "NETMEND_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)


def test_settings_read_prefixed_environment(monkeypatch):
    monkeypatch.setenv("NETMEND_OUT", "/tmp/netmend-out")
    monkeypatch.setenv("NETMEND_LOG_LEVEL", "debug")

    settings = Settings()
    assert settings.OUT == Path("/tmp/netmend-out")
    assert settings.LOG_LEVEL == "DEBUG"


def test_settings_reject_invalid_values(monkeypatch):
    monkeypatch.setenv("NETMEND_DEFAULT_TRUST", "1.5")
    with pytest.raises(ValidationError):
        Settings()


def test_load_config_file(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("# comment\n\nmax-removals = 10\nbudget=auto\n")
    assert load_config_file(path) == {"max_removals": "10", "budget": "auto"}


def test_load_config_file_rejects_bad_line(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("seed 3\n")
    with pytest.raises(ConfigError):
        load_config_file(path)


def test_load_config_file_rejects_invalid_utf8(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_bytes(b"seed = 3\nq = \xff\n")
    with pytest.raises(ConfigError, match=":2:"):
        load_config_file(path)


def test_build_run_config():
    config = build_run_config(
        {"gen": "power_law", "n": "100", "gamma": "2.5", "q": "5", "seed": "3", "budget": "12.5"}
    )

    assert config.generator.kind == "power_law"
    assert config.generator.seed == 3
    assert config.attack.target_components == 5
    assert config.budget == 12.5
    assert config.mechanisms == ["strategic", "budget"]


def test_build_run_config_compare_random():
    base = {"gen": "er", "n": 10, "p": 0.5, "q": 2, "seed": 1}

    assert build_run_config(base).mechanisms == ["strategic", "budget"]
    config = build_run_config({**base, "mechanism": "budget", "compare_random": "true"})
    assert config.mechanisms == ["budget", "random"]


def test_build_run_config_needs_seed_and_q():
    with pytest.raises(ConfigError):
        build_run_config({"gen": "er", "n": 10, "p": 0.5, "q": 2})
    with pytest.raises(ConfigError):
        build_run_config({"gen": "er", "n": 10, "p": 0.5, "seed": 1})


def test_build_run_config_rejects_bad_values():
    base = {"gen": "er", "n": 10, "p": 0.5, "q": 2, "seed": 1}
    for extra in ({"budget": "-3"}, {"tx_range": "5,2"}, {"tx_range": "5"}, {"gen": "lattice"}):
        with pytest.raises(ConfigError):
            build_run_config({**base, **extra})


def test_with_seed_reseeds_every_part(tmp_path):
    config = build_run_config({"gen": "er", "n": 10, "p": 0.5, "q": 2, "seed": 1, "repeats": 3})
    other = config.with_seed(9, tmp_path)

    assert (other.seed, other.generator.seed, other.attack.seed) == (9, 9, 9)
    assert other.repeats == 1 and other.out == tmp_path


def test_cents_round_half_up():
    assert to_cents(1.005) == 101
    assert to_cents(1.25) == 125
    assert from_cents(125) == 1.25


def test_configure_logging_writes_to_current_stderr(capsys):
    configure_logging("info")
    configure_logging("debug")
    logger = logging.getLogger("netmend.tests")

    logger.debug("restored %d components", 3)
    root = logging.getLogger("netmend")
    assert root.level == logging.DEBUG
    assert sum(isinstance(h, logging.StreamHandler) for h in root.handlers) == 1
    assert "DEBUG netmend.tests: restored 3 components" in capsys.readouterr().err
