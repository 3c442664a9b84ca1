"""
Configuration for the chain reachability toolkit.

Settings come from three layers, later ones winning: the built-in DEFAULTS,
config.yaml (or the file passed to the CLI with --config), and the
environment variables listed in ENV_OVERRIDES. String values may embed
${VAR} placeholders, filled from the environment after .env is loaded.
"""
import copy
import logging
import os
import re
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from .errors import ConfigError

PROJECT_ROOT = Path(__file__).resolve().parents[2]

DEFAULTS: Dict[str, Any] = {
    "logging": {
        "level": "INFO",
        "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        "file": None,
    },
    "generators": {
        "seed": 42,
        "ws_rewire_probability": 0.9,
        "pb_paths": 100,
        "ba_attachments": 5,
    },
    "bench": {
        "models": ["ER", "BA", "WS", "PB"],
        "sizes": [2000],
        "degrees": [5, 10, 20, 40, 80],
        "seeds": 3,
        "with_width": False,
        "reduce_first": False,
        "skip_baseline": False,
        "csv": "reports/bench.csv",
        "plot_data": None,
        "jobs": 1,
    },
    "width": {
        "workers": 1,
    },
}

ENV_OVERRIDES = {
    "CHAINREACH_LOG_LEVEL": "logging.level",
}

_PLACEHOLDER = re.compile(r"\$\{([A-Za-z_][A-Za-z0-9_]*)\}")


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def _substitute(match: "re.Match[str]") -> str:
    name = match.group(1)
    value = os.environ.get(name)
    if value is None:
        logging.warning(f"Environment variable {name} referenced in config but not set")
        return ""
    return value


def _interpolate(value: Any) -> Any:
    if isinstance(value, str):
        return _PLACEHOLDER.sub(_substitute, value)
    if isinstance(value, dict):
        return {key: _interpolate(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_interpolate(item) for item in value]
    return value


class Config:
    """
    Process-wide settings, loaded once and shared by every module.

    Example:
        workers = Config().get("width.workers", 1)
    """
    _instance: Optional["Config"] = None
    _config_data: Dict[str, Any] = {}

    def __new__(cls, config_path: Optional[str] = None) -> "Config":
        if cls._instance is None:
            instance = super().__new__(cls)
            instance._load(Path(config_path) if config_path else PROJECT_ROOT / "config.yaml")
            cls._instance = instance
        return cls._instance

    @classmethod
    def reset(cls) -> None:
        """Drop the loaded instance so the next call reloads from disk."""
        cls._instance = None
        cls._config_data = {}

    def _load(self, path: Path) -> None:
        load_dotenv(PROJECT_ROOT / ".env")

        loaded: Any = {}
        try:
            with path.open("r") as handle:
                loaded = yaml.safe_load(handle) or {}
        except FileNotFoundError:
            logging.warning(f"Configuration file not found: {path}, using defaults")
        except yaml.YAMLError as e:
            raise ConfigError(f"Error parsing YAML configuration {path}: {e}") from e
        if not isinstance(loaded, dict):
            raise ConfigError(f"{path}: top level must be a mapping, got {type(loaded).__name__}")

        self._config_data = _interpolate(_merge(DEFAULTS, loaded))
        for env_var, key_path in ENV_OVERRIDES.items():
            if os.environ.get(env_var):
                self.set(key_path, os.environ[env_var])

    def get(self, key_path: str, default: Optional[Any] = None) -> Any:
        """
        Look up a value by dot path, e.g. 'bench.degrees'.

        Returns default when any segment of the path is missing.
        """
        value: Any = self._config_data
        for key in key_path.split("."):
            if not isinstance(value, dict) or key not in value:
                return default
            value = value[key]
        return value

    def get_all(self) -> Dict[str, Any]:
        return copy.deepcopy(self._config_data)

    def set(self, key_path: str, value: Any) -> None:
        """Override a value by dot path, creating intermediate sections."""
        *parents, leaf = key_path.split(".")
        section = self._config_data
        for key in parents:
            if not isinstance(section.get(key), dict):
                section[key] = {}
            section = section[key]
        section[leaf] = value
