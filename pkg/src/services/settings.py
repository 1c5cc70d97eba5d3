"""Run configuration and logging setup."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

LOGGER_NAME = "src"


@dataclass(frozen=True)
class Settings:
    """Limits and switches for one run, built from command-line flags."""

    max_degree: int = 6
    max_side: int = 729
    max_lie_dim: int = 64
    truncation: int = 6
    central_scalar: Fraction = Fraction(1)
    check_ybe: bool = True
    data_dir: Path = field(default_factory=lambda: Path("src/data"))
    verbosity: int = 0
    quiet: bool = False

    @property
    def log_level(self) -> int:
        if self.quiet:
            return logging.ERROR
        if self.verbosity >= 2:
            return logging.DEBUG
        if self.verbosity == 1:
            return logging.INFO
        return logging.WARNING


def configure_logging(settings: Settings) -> logging.Logger:
    """Attach a single stderr RichHandler to the package logger.

    Args:
        settings: Supplies the verbosity and quiet flags

    Returns:
        The configured package logger
    """
    logger = logging.getLogger(LOGGER_NAME)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = RichHandler(console=Console(stderr=True), show_path=False)
    handler.setFormatter(logging.Formatter("%(message)s"))
    logger.addHandler(handler)
    logger.setLevel(settings.log_level)
    logger.propagate = False
    return logger
