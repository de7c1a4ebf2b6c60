"""Zeno Darwin logging."""

from __future__ import annotations

import logging
import logging.config
import sys
from dataclasses import dataclass
from typing import Any, Literal

from pythonjsonlogger import json
from rich.console import Console
from rich.logging import RichHandler

LoggingFormat = Literal["rich", "json", "basic", "auto"]
ResolvedFormat = Literal["rich", "json", "basic"]
LoggingLevel = Literal[
    "CRITICAL", "FATAL", "ERROR", "WARN", "WARNING", "INFO", "DEBUG", "NOTSET"
]
# processName tells sweep workers apart
JSON_FIELDS = [
    "message",
    "levelname",
    "name",
    "asctime",
    "processName",
    "module",
    "funcName",
    "lineno",
]
JSON_FORMAT = " ".join(f"%({f})s" for f in JSON_FIELDS)
BASIC_FORMAT = "%(levelname)s\t%(processName)s\t%(message)s"
DEFAULT_LOG_CONFIG = {
    "version": 1,
    "disable_existing_loggers": False,
    "loggers": {
        "concurrent.futures": {
            "level": "WARNING",
        },
    },
}

_SETUP: dict[str, LogSetup] = {}


@dataclass(frozen=True)
class LogSetup:
    """Resolved logging setup, replayed in sweep worker processes."""

    logging_format: ResolvedFormat
    level: LoggingLevel
    config: dict[str, Any] | None = None


def resolve_format(logging_format: LoggingFormat) -> ResolvedFormat:
    """Rich on a TTY, JSON otherwise, for `auto`."""

    match logging_format:
        case "auto":
            return "rich" if (sys.stderr and sys.stderr.isatty()) else "json"
        case _:
            return logging_format


def _handler(logging_format: ResolvedFormat) -> logging.Handler:
    if logging_format == "rich":
        return RichHandler(console=Console(stderr=True), show_path=False)

    handler = logging.StreamHandler()
    if logging_format == "json":
        handler.setFormatter(json.JsonFormatter(JSON_FORMAT))
    else:
        handler.setFormatter(logging.Formatter(BASIC_FORMAT))
    return handler


def init_logging(
    logging_format: LoggingFormat | None = None,
    level: LoggingLevel = "NOTSET",
    config: dict[str, Any] | None = None,
) -> None:
    """
    Initialize logging.

    A format of `None` leaves handlers alone and only applies `config`.
    """

    if logging_format is not None:
        resolved = resolve_format(logging_format)
        logging.basicConfig(
            level=level,
            format="%(message)s",
            datefmt="[%X]",
            handlers=[_handler(resolved)],
        )
        _SETUP["active"] = LogSetup(resolved, level, config)

    if config:
        logging.config.dictConfig(config)


def worker_setup() -> LogSetup | None:
    """Setup of this process, None before `init_logging`."""

    return _SETUP.get("active")


def init_worker_logging(setup: LogSetup | None) -> None:
    """Process pool initializer mirroring the parent's logging."""

    if setup is None:
        return
    init_logging(setup.logging_format, setup.level, config=setup.config)
