"""Tests for run settings and logging setup."""

import dataclasses
import logging
from fractions import Fraction
from pathlib import Path

import pytest
from rich.logging import RichHandler
from src.services.settings import LOGGER_NAME, Settings, configure_logging


def test_defaults():
    """Test the documented default limits."""
    settings = Settings()
    assert settings.max_degree == 6
    assert settings.max_side == 729
    assert settings.max_lie_dim == 64
    assert settings.central_scalar == Fraction(1)
    assert settings.data_dir == Path("src/data")
    assert settings.check_ybe


def test_settings_are_frozen():
    """Test settings cannot be changed after construction."""
    with pytest.raises(dataclasses.FrozenInstanceError):
        Settings().max_degree = 3


@pytest.mark.parametrize("verbosity, quiet, level", [
    (0, False, logging.WARNING),
    (1, False, logging.INFO),
    (2, False, logging.DEBUG),
    (5, False, logging.DEBUG),
    (2, True, logging.ERROR),
])
def test_log_level(verbosity, quiet, level):
    """Test verbosity and quiet map onto logging levels."""
    assert Settings(verbosity=verbosity, quiet=quiet).log_level == level


def test_configure_logging_installs_one_handler():
    """Test repeated configuration keeps a single RichHandler."""
    configure_logging(Settings(verbosity=1))
    logger = configure_logging(Settings(verbosity=2))
    assert logger.name == LOGGER_NAME
    assert len(logger.handlers) == 1
    assert isinstance(logger.handlers[0], RichHandler)
    assert logger.level == logging.DEBUG
    assert not logger.propagate
