import logging
import os
import sys
from datetime import UTC, datetime

import orjson

from .levels import LogLevel

JSON_ENV_VAR = "TRICKLE_JSON_LOGGING"
TEXT_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"

# Attributes every LogRecord carries; anything else came in through `extra`.
_RECORD_ATTRIBUTES = frozenset(logging.makeLogRecord({}).__dict__) | {"message", "asctime"}


def _extras(record: logging.LogRecord) -> dict[str, object]:
    return {k: v for k, v in record.__dict__.items() if k not in _RECORD_ATTRIBUTES}


def _json_from_env() -> bool:
    return os.getenv(JSON_ENV_VAR, "").strip().lower() in {"1", "true", "yes"}


class _UTCFormatter(logging.Formatter):
    def formatTime(  # noqa: N802
        self, record: logging.LogRecord, datefmt: str | None = None
    ) -> str:
        """Record creation time in UTC, ISO-8601 unless `datefmt` is given."""
        created = datetime.fromtimestamp(record.created, tz=UTC)
        return created.strftime(datefmt) if datefmt else created.isoformat()


class CustomFormatter(_UTCFormatter):
    """Plain-text lines ending with the record's `extra` fields as `[key=value ...]`."""

    def format(self, record: logging.LogRecord) -> str:
        """Format the record and append its extras."""
        line = super().format(record)
        if extras := _extras(record):
            rendered = " ".join(f"{k}={v}" for k, v in sorted(extras.items()))
            line = f"{line} [{rendered}]"
        return line


class JSONFormatter(_UTCFormatter):
    """One JSON object per record, `extra` fields merged at top level."""

    def format(self, record: logging.LogRecord) -> str:
        """Serialize the record with orjson; unknown values fall back to `str`."""
        payload = {
            "timestamp": self.formatTime(record),
            "log_level": record.levelname,
            "logger_name": record.name,
            "message": record.getMessage(),
            **_extras(record),
        }
        return orjson.dumps(payload, default=str, option=orjson.OPT_SERIALIZE_NUMPY).decode()


def get_logger(
    name: str, log_level: LogLevel | None = None, *, json_logging: bool | None = None
) -> logging.Logger:
    """Get a logger writing to stderr.

    Args:
        name (str): Name of the logger.
        log_level (LogLevel | None, optional): Level; None reads the environment.
        json_logging (bool | None, optional): JSON lines instead of text; None reads
            TRICKLE_JSON_LOGGING.

    Returns:
        logging.Logger: the configured logger.

    """
    logger = logging.getLogger(name)
    logger.propagate = False

    # One handler per logger name, however often it is requested.
    if not logger.handlers:
        use_json = _json_from_env() if json_logging is None else json_logging
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(JSONFormatter() if use_json else CustomFormatter(TEXT_FORMAT))
        logger.addHandler(handler)

    logger.setLevel(log_level or LogLevel.get_default_value())
    return logger
