"""
Settings Tests

This module contains tests for loading and validating YAML settings.
"""

import logging

import pytest
import yaml

from stirsort.errors import SettingsError
from stirsort.settings import DEFAULT_SETTINGS, load_settings

# Test Data
TEST_SETTINGS = {
    "search": {
        "max_cells": 12,
        "state_limit": 5000,
    },
    "scaling": {
        "workers": 4,
    },
    "mixing": {
        "radii": [1, 3],
    },
    "logging": {
        "level": "DEBUG",
    },
}


@pytest.fixture
def settings_file(tmp_path):
    """Create a temporary settings file"""
    path = tmp_path / "settings.yaml"
    with open(path, "w") as f:
        yaml.dump(TEST_SETTINGS, f)
    return str(path)


def write_yaml(tmp_path, text):
    path = tmp_path / "custom.yaml"
    path.write_text(text)
    return str(path)


def test_defaults():
    """Test defaults are returned without a path and are independent copies"""
    settings = load_settings()
    assert settings == DEFAULT_SETTINGS
    settings["search"]["max_cells"] = 1
    assert DEFAULT_SETTINGS["search"]["max_cells"] == 20


def test_load_merges_over_defaults(settings_file):
    """Test file values override defaults key by key"""
    settings = load_settings(settings_file)
    assert settings["search"]["max_cells"] == 12
    assert settings["search"]["state_limit"] == 5000
    assert settings["scaling"]["workers"] == 4
    assert settings["scaling"]["exact_cap"] == 16
    assert settings["mixing"]["radii"] == [1, 3]
    assert settings["logging"]["level"] == "DEBUG"


def test_empty_file(tmp_path):
    """Test an empty file yields the defaults"""
    assert load_settings(write_yaml(tmp_path, "")) == DEFAULT_SETTINGS


def test_missing_file():
    """Test a missing file is an error"""
    with pytest.raises(SettingsError, match="not found"):
        load_settings("/nonexistent/settings.yaml")


def test_invalid_yaml(tmp_path):
    """Test unparseable YAML"""
    with pytest.raises(SettingsError, match="Failed to parse"):
        load_settings(write_yaml(tmp_path, "search: [unclosed"))


def test_invalid_values(tmp_path):
    """Test type and range checks"""
    with pytest.raises(SettingsError, match="must contain a mapping"):
        load_settings(write_yaml(tmp_path, "- 1\n- 2\n"))

    with pytest.raises(SettingsError, match="search.max_cells"):
        load_settings(write_yaml(tmp_path, "search:\n  max_cells: many\n"))

    with pytest.raises(SettingsError, match="scaling.workers"):
        load_settings(write_yaml(tmp_path, "scaling:\n  workers: true\n"))

    with pytest.raises(SettingsError, match="must be >= 1"):
        load_settings(write_yaml(tmp_path, "generation:\n  max_tries: 0\n"))

    with pytest.raises(SettingsError, match="must be a mapping"):
        load_settings(write_yaml(tmp_path, "search: 3\n"))

    with pytest.raises(SettingsError, match="positive integers"):
        load_settings(write_yaml(tmp_path, "mixing:\n  radii: [1, -2]\n"))


def test_unknown_keys_are_ignored(tmp_path, caplog):
    """Test unknown keys are skipped with a warning"""
    with caplog.at_level(logging.WARNING):
        settings = load_settings(write_yaml(tmp_path, "search:\n  speed: 3\nextra: 1\n"))
    assert "search.speed" in caplog.text
    assert "extra" in caplog.text
    assert settings == DEFAULT_SETTINGS
