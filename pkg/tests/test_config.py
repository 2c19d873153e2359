import pytest
from pydantic import ValidationError

from tendonplan.config import Settings, load_settings


def test_defaults():
    settings = load_settings(environ={})
    assert settings == Settings()
    assert settings.wear_file == "wear.json"
    assert settings.ga.population_size == 50


def test_yaml_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("seed: 3\nruns: 10\nga:\n  generations: 5\n", encoding="utf-8")
    settings = load_settings(str(path), environ={})
    assert settings.seed == 3
    assert settings.runs == 10
    assert settings.ga.generations == 5
    assert settings.ga.population_size == 50


def test_environment_overrides_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("seed: 3\nwear_file: a.json\n", encoding="utf-8")
    environ = {"TENDONPLAN_SEED": "8", "TENDONPLAN_WEAR_FILE": "sqlite:///wear.db"}
    settings = load_settings(str(path), environ=environ)
    assert settings.seed == 8
    assert settings.wear_file == "sqlite:///wear.db"


def test_empty_file(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("", encoding="utf-8")
    assert load_settings(str(path), environ={}) == Settings()


def test_bad_values(tmp_path):
    with pytest.raises(ValidationError):
        load_settings(environ={"TENDONPLAN_SEED": "abc"})
    path = tmp_path / "settings.yaml"
    path.write_text("runs: 0\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_settings(str(path), environ={})
    path.write_text("- 1\n- 2\n", encoding="utf-8")
    with pytest.raises(ValueError, match="mapping"):
        load_settings(str(path), environ={})


def test_log_settings_from_environment():
    settings = load_settings(environ={"TENDONPLAN_LOG_FORMAT": "json", "TENDONPLAN_LOG_FILE": "x.log"})
    assert settings.log_format == "json"
    assert settings.log_file == "x.log"
    with pytest.raises(ValidationError):
        load_settings(environ={"TENDONPLAN_LOG_FORMAT": "xml"})
