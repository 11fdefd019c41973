# ABOUTME: Configuration management for CLI
# ABOUTME: Merges command-line overrides into the library settings and sets up logging

import logging
import sys
from typing import Optional

from crossed.config import Settings, get_settings


def resolve_settings(seed: Optional[int] = None, max_c2: Optional[int] = None) -> Settings:
    """Library settings with the given flags taking precedence over the environment"""
    settings = get_settings()
    overrides = {key: value for key, value in (("seed", seed), ("max_c2", max_c2)) if value is not None}
    if not overrides:
        return settings
    # Revalidate so flag values obey the same constraints as environment values
    return Settings(**{**settings.model_dump(), **overrides})


def configure_logging(level: Optional[str] = None) -> None:
    """Send log records to stderr so reports on stdout stay byte-identical"""
    name = (level or get_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, name, logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
        force=True,
    )
