"""Configuration loading and settings management."""

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any


@dataclass
class Config:
    """Configuration settings for cardcnf."""

    # External solver
    solver_command: str = ""
    timeout_ms: int = 60_000
    temp_dir: str = field(default_factory=tempfile.gettempdir)
    repeats: int = 1

    # Set families
    hall_retries: int = 32
    cover_free_constant: float = 2.0

    # Verification
    window_limit: int = 50_000
    random_samples: int = 1000
    pc_prefixes: int = 500

    log_level: str = "WARNING"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Config":
        """Create Config from a dictionary, ignoring unknown keys."""
        valid_keys = {f.name for f in cls.__dataclass_fields__.values()}
        filtered = {k: v for k, v in data.items() if k in valid_keys}
        return cls(**filtered)


def config_path() -> Path:
    """Return the path of the user config file."""
    return Path.home() / ".cardcnf" / "config.json"


def load_config() -> Config:
    """Load configuration from file and environment.

    Loads settings in order of precedence (later overrides earlier):
    1. Default values
    2. ~/.cardcnf/config.json (if exists)
    3. CARDCNF_* environment variables

    Returns:
        Config object with merged settings.
    """
    config_data: dict[str, Any] = {}

    path = config_path()
    if path.exists():
        try:
            with open(path) as f:
                loaded = json.load(f)
            if isinstance(loaded, dict):
                config_data = loaded
        except (json.JSONDecodeError, OSError):
            pass  # Use defaults if config is invalid

    env_mapping = {
        "CARDCNF_SOLVER": ("solver_command", str),
        "CARDCNF_TIMEOUT_MS": ("timeout_ms", int),
        "CARDCNF_TEMP_DIR": ("temp_dir", str),
        "CARDCNF_REPEATS": ("repeats", int),
        "CARDCNF_HALL_RETRIES": ("hall_retries", int),
        "CARDCNF_COVER_FREE_CONSTANT": ("cover_free_constant", float),
        "CARDCNF_WINDOW_LIMIT": ("window_limit", int),
        "CARDCNF_RANDOM_SAMPLES": ("random_samples", int),
        "CARDCNF_PC_PREFIXES": ("pc_prefixes", int),
        "CARDCNF_LOG_LEVEL": ("log_level", str),
    }

    for env_var, (config_key, type_fn) in env_mapping.items():
        value = os.environ.get(env_var)
        if value is not None:
            try:
                config_data[config_key] = type_fn(value)
            except ValueError:
                pass  # Ignore invalid env values

    return Config.from_dict(config_data)


_config: Config | None = None


def get_config() -> Config:
    """Get the process-wide configuration, loading it on first use."""
    global _config
    if _config is None:
        _config = load_config()
    return _config


def reset_config() -> None:
    """Drop the cached configuration so the next get_config() reloads it."""
    global _config
    _config = None
