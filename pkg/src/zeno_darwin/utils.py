"""Zeno Darwin utils."""

from __future__ import annotations

import logging
import math
import os
import tempfile
from contextlib import suppress
from datetime import timedelta
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path

from human_readable import precise_delta

_LOGGER = logging.getLogger(__name__)

try:
    VERSION = version("zeno_darwin")
except PackageNotFoundError:  # pragma: no cover
    VERSION = "0.0.0"

FLOAT_DIGITS = 17


def format_float(value: float) -> str:
    """Serialize float with 17 significant digits (exact round trip)."""

    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    if math.isnan(value):
        return "nan"
    return f"{value:.{FLOAT_DIGITS}g}"


def human_format(interval: float | timedelta) -> str:
    """Get human readable format for interval."""

    if isinstance(interval, int | float):
        interval = timedelta(seconds=interval)

    return str(precise_delta(interval, minimum_unit="milliseconds"))


def atomic_write_text(path: Path, text: str) -> None:
    """
    Write text to path atomically.

    Content goes to a temp file in the same directory which is renamed over
    `path` only once fully written, so a failure never leaves partial output.
    """

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(
        prefix=f".{path.name}.", suffix=".tmp", dir=path.parent
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        Path(tmp_name).replace(path)
    except BaseException:
        with suppress(OSError):
            Path(tmp_name).unlink()
        raise
    _LOGGER.debug("Wrote %s (%d bytes)", path, len(text))
