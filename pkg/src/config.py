"""
Configuration loading.
Path: src/config.py
"""
import os
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)

PROJECT_ROOT = Path(__file__).resolve().parent.parent
DEFAULT_CONFIG_PATH = PROJECT_ROOT / "config.yaml"

SEED_ENV_VAR = "GEODEDUCE_SEED"
CONFIG_ENV_VAR = "GEODEDUCE_CONFIG"


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from config.yaml.

    Args:
        path: Explicit config file. Falls back to $GEODEDUCE_CONFIG, then the
            config.yaml at the project root.

    Returns:
        Parsed configuration (empty dict when no file is readable)
    """
    config_path = Path(path or os.getenv(CONFIG_ENV_VAR) or DEFAULT_CONFIG_PATH)
    config: Dict[str, Any] = {}
    try:
        if config_path.exists():
            with open(config_path, 'r', encoding='utf-8') as f:
                config = yaml.safe_load(f) or {}
        else:
            logger.warning("Config file %s not found, using defaults", config_path)
    except yaml.YAMLError as e:
        logger.warning("Failed to load %s: %s", config_path, e)

    seed = os.getenv(SEED_ENV_VAR)
    if seed is not None:
        try:
            config.setdefault('harness', {})['seed'] = int(seed)
        except ValueError:
            logger.warning("Ignoring non-integer %s=%r", SEED_ENV_VAR, seed)
    return config


def section(config: Dict[str, Any], name: str) -> Dict[str, Any]:
    """Return a config section, tolerating a missing or null entry."""
    return config.get(name) or {}


def resolve_path(value: str) -> Path:
    """Resolve a config path relative to the project root."""
    p = Path(value)
    return p if p.is_absolute() else (PROJECT_ROOT / p).resolve()
