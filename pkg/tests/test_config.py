import os

import pytest

from src.config import BASE_CASE_COUNTS, SUITE_NAMES, EngineConfig, EngineSetup


def test_config_from_env(monkeypatch):
    monkeypatch.setenv("HEISENBERG_MODULUS", "24")
    monkeypatch.setenv("HEISENBERG_ENABLED_SUITES", "symbols, residue")
    monkeypatch.setenv("HEISENBERG_DEBUG", "true")

    config = EngineConfig.from_env()
    assert config.modulus == 24
    assert config.enabled_suites == ["symbols", "residue"]
    assert config.debug is True
    assert config.inject_fault is False

def test_config_from_env_file(tmp_path, mocker):
    mocker.patch.dict(os.environ, {}, clear=True)
    env_file = tmp_path / ".env"
    env_file.write_text("HEISENBERG_DIGITS=40\nHEISENBERG_CASES_SCALE=0.5\n")

    config = EngineConfig.from_env(str(env_file))
    assert config.digits == 40
    assert config.cases_scale == 0.5

@pytest.mark.parametrize("field,value", [
    ("modulus", 12),
    ("digits", 10),
    ("cubature_tol", 1e-12),
    ("cases_scale", 0),
    ("enabled_suites", ["symbols", "geometry"]),
    ("default_emitter", "datahub"),
])
def test_config_validation(field, value):
    config = EngineConfig()
    setattr(config, field, value)

    with pytest.raises(ValueError):
        config.validate()

def test_suite_config_scales_counts():
    config = EngineConfig()
    config.cases_scale = 0.01
    config.inject_fault = True

    suite_config = config.get_suite_config("symbols")
    assert suite_config["counts"]["field_axioms"] == 10
    assert suite_config["counts"]["parametrix"] == 1
    assert suite_config["inject_fault"] is True
    assert set(suite_config["counts"]) == set(BASE_CASE_COUNTS["symbols"])
    assert config.get_suite_config("geometry") == {}

def test_engine_setup(mock_config):
    setup = EngineSetup(mock_config)
    setup.setup()

    assert set(setup.emitters) == {"console", "json"}
    assert setup.get_emitter() is setup.get_emitter("console")
    assert set(setup.suites) == set(SUITE_NAMES)
    assert setup.get_suite("opalg").counts["mehler"] == 1
