"""Configuration settings for drg-motion.

Loads settings from config.yaml and .env file.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from os import getenv
from pathlib import Path

import yaml
from dotenv import load_dotenv

# Load .env file first so env vars can override
load_dotenv()

CONFIG_FILE = Path(__file__).parent.parent / "config.yaml"


@dataclass
class Settings:
    """Application settings loaded from config.yaml and .env."""

    # Case-analysis constants
    eta_d: float = field(default=0.01)
    eps_d: float = field(default=0.01)
    m_d: int = field(default=6)
    epsilon: float | None = field(default=None)

    # Automorphism enumeration cap (DRG_MAX_GROUP overrides)
    max_group: int = field(default=1_000_000)

    # Scanner fan-out
    scan_workers: int = field(default=4)

    # Numerics
    snap_tol: float = field(default=1e-6)
    distinct_tol: float = field(default=1e-9)
    compare_tol: float = field(default=1e-9)

    # Output
    event_log: bool = field(default=True)


def _load_config_from_yaml() -> dict:
    """Load configuration from config.yaml file."""
    if CONFIG_FILE.exists():
        with open(CONFIG_FILE) as f:
            return yaml.safe_load(f) or {}
    return {}


def _env_int(name: str, fallback: int) -> int:
    raw = getenv(name)
    if raw is None or not raw.strip():
        return fallback
    try:
        return int(raw)
    except ValueError as e:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from e


def _merge_settings(yaml_config: dict) -> Settings:
    """Merge YAML config with defaults, prioritizing YAML values and then env."""
    defaults = Settings()

    classifier = yaml_config.get("classifier", {}) or {}
    motion = yaml_config.get("motion", {}) or {}
    scan = yaml_config.get("scan", {}) or {}
    numerics = yaml_config.get("numerics", {}) or {}
    output = yaml_config.get("output", {}) or {}

    max_group = int(motion.get("max_group", defaults.max_group))

    return Settings(
        eta_d=float(classifier.get("eta_d", defaults.eta_d)),
        eps_d=float(classifier.get("eps_d", defaults.eps_d)),
        m_d=int(classifier.get("m_d", defaults.m_d)),
        epsilon=classifier.get("epsilon", defaults.epsilon),
        max_group=_env_int("DRG_MAX_GROUP", max_group),
        scan_workers=int(scan.get("workers", defaults.scan_workers)),
        snap_tol=float(numerics.get("snap_tol", defaults.snap_tol)),
        distinct_tol=float(numerics.get("distinct_tol", defaults.distinct_tol)),
        compare_tol=float(numerics.get("compare_tol", defaults.compare_tol)),
        event_log=bool(output.get("event_log", defaults.event_log)),
    )


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance loaded from config.yaml."""
    yaml_config = _load_config_from_yaml()
    return _merge_settings(yaml_config)
