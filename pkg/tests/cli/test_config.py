# ABOUTME: Tests for CLI configuration module
# ABOUTME: Validates flag overrides of the library settings and logging setup

import logging
import sys

import pytest
from pydantic import ValidationError

from cli.config import configure_logging, resolve_settings
from crossed.config import get_settings


@pytest.fixture
def fresh_settings():
    """Clear the cached settings around a test that changes the environment"""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_resolve_settings_without_flags_returns_cached_settings(fresh_settings):
    """Test that no overrides means the shared settings instance"""
    assert resolve_settings() is get_settings()


def test_resolve_settings_applies_flags(fresh_settings):
    """Test that flag values replace the defaults"""
    settings = resolve_settings(seed=5, max_c2=64)

    assert settings.seed == 5
    assert settings.max_c2 == 64
    assert settings.sample_triples == get_settings().sample_triples


def test_resolve_settings_reads_environment(fresh_settings, monkeypatch):
    """Test that CROSSED_* variables feed the settings"""
    monkeypatch.setenv("CROSSED_SEED", "9")
    get_settings.cache_clear()

    assert resolve_settings().seed == 9
    assert resolve_settings(seed=3).seed == 3


def test_resolve_settings_rejects_invalid_flag(fresh_settings):
    """Test that flags obey the same constraints as the environment"""
    with pytest.raises(ValidationError):
        resolve_settings(max_c2=0)


def test_configure_logging_uses_stderr():
    """Test that log records go to stderr at the requested level"""
    configure_logging("debug")
    try:
        root = logging.getLogger()
        assert root.level == logging.DEBUG
        assert root.handlers[0].stream is sys.stderr
    finally:
        configure_logging("warning")


def test_configure_logging_unknown_level_falls_back_to_warning():
    """Test that an unknown level name does not raise"""
    configure_logging("chatty")

    assert logging.getLogger().level == logging.WARNING
