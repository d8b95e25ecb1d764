"""
Logging setup shared by the CLI and scripts.
Path: src/utils/logger.py
"""
import logging
import sys

LOG_FORMAT = "[%(levelname)s] %(message)s"
DEBUG_FORMAT = "[%(levelname)s] %(name)s: %(message)s"


def setup_logging(level: str = "INFO", verbose: bool = False) -> None:
    """
    Configure the root logger once.

    Args:
        level: Level name from config.yaml
        verbose: Force DEBUG and include logger names
    """
    resolved = logging.DEBUG if verbose else getattr(logging, str(level).upper(), logging.INFO)
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(DEBUG_FORMAT if verbose else LOG_FORMAT))
    root.addHandler(handler)
    root.setLevel(resolved)
