"""
Settings Module

This module loads the YAML settings that tune search caps, sampling
budgets, experiment defaults and logging.
"""

import copy
import logging
import os
from typing import Any, Dict, Optional

import yaml

from .errors import SettingsError

logger = logging.getLogger(__name__)

DEFAULT_SETTINGS: Dict[str, Any] = {
    "search": {
        "max_cells": 20,
        "state_limit": 2_000_000,
    },
    "generation": {
        "max_tries": 10_000,
    },
    "scaling": {
        "exact_cap": 16,
        "workers": 1,
    },
    "mixing": {
        "radii": [1, 2, 4, 8, 16, 32],
    },
    "logging": {
        "level": "WARNING",
        "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    },
}


def _merge(base: Dict[str, Any], override: Dict[str, Any], path: str = "") -> Dict[str, Any]:
    """Deep-merge override into a copy of base

    Args:
        base: Mapping providing the accepted keys and their types
        override: Mapping read from a settings file
        path: Dotted prefix used in messages

    Returns:
        Merged mapping

    Raises:
        SettingsError: If a value has the wrong type
    """
    merged = copy.deepcopy(base)
    for key, value in override.items():
        dotted = f"{path}{key}"
        if key not in base:
            logger.warning(f"Ignoring unknown settings key: {dotted}")
            continue
        default = base[key]
        if isinstance(default, dict):
            if not isinstance(value, dict):
                raise SettingsError(f"Settings section {dotted} must be a mapping")
            merged[key] = _merge(default, value, f"{dotted}.")
        elif isinstance(default, bool) or not isinstance(value, type(default)) or isinstance(value, bool):
            raise SettingsError(
                f"Invalid value for {dotted}: expected {type(default).__name__}, got {value!r}"
            )
        else:
            merged[key] = value
    return merged


def load_settings(path: Optional[str] = None) -> Dict[str, Any]:
    """Load settings, falling back to the built-in defaults

    Args:
        path: Optional path to a YAML settings file

    Returns:
        Settings mapping with every key present

    Raises:
        SettingsError: If the file is missing, unreadable or invalid
    """
    if path is None:
        return copy.deepcopy(DEFAULT_SETTINGS)

    if not os.path.exists(path):
        raise SettingsError(f"Settings file not found: {path}")

    try:
        with open(path) as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise SettingsError(f"Failed to parse settings file {path}: {e}")

    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise SettingsError(f"Settings file {path} must contain a mapping")

    settings = _merge(DEFAULT_SETTINGS, data)
    for section in ("search", "generation", "scaling"):
        for key, value in settings[section].items():
            if value < 1:
                raise SettingsError(f"Invalid value for {section}.{key}: must be >= 1")
    if not all(isinstance(r, int) and r >= 1 for r in settings["mixing"]["radii"]):
        raise SettingsError("mixing.radii must be a list of positive integers")

    logger.debug(f"Loaded settings from {path}")
    return settings
