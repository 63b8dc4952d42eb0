from __future__ import annotations

import enum
import logging
import os

LEVEL_ENV_VARS = ("TRICKLE_LOG_LEVEL", "LOG_LEVEL")


class LogLevel(enum.IntEnum):
    """Levels accepted by `get_logger`, mirroring the `logging` constants."""

    CRITICAL = logging.CRITICAL
    ERROR = logging.ERROR
    WARNING = logging.WARNING
    INFO = logging.INFO
    DEBUG = logging.DEBUG
    NOTSET = logging.NOTSET

    @classmethod
    def from_str(cls, level: str, fallback: LogLevel) -> LogLevel:
        """Level named `level` (any case), or `fallback` for an unknown name."""
        return cls.__members__.get(level.strip().upper(), fallback)

    @classmethod
    def get_default_value(cls) -> LogLevel:
        """Level from the first of TRICKLE_LOG_LEVEL and LOG_LEVEL that is set; INFO otherwise."""
        for var in LEVEL_ENV_VARS:
            if level := os.getenv(var):
                return cls.from_str(level, cls.INFO)
        return cls.INFO
