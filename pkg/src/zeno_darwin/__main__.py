"""Zeno Darwin."""

from __future__ import annotations

import os
import sys
from pathlib import Path

from zeno_darwin.cli import parse_and_dispatch

try:
    from dotenv import load_dotenv
except ImportError:
    load_dotenv = None  # type: ignore[assignment]

ENV_FILE_VAR = "ZDARWIN_ENV_FILE"
DEFAULT_ENV_FILE = ".env"


def _load_env() -> None:
    """Load ZDARWIN_* settings from a dotenv file, when python-dotenv is installed."""

    if load_dotenv is None:
        return
    path = Path(os.environ.get(ENV_FILE_VAR, DEFAULT_ENV_FILE))
    # without the file, search parent directories for the default one
    load_dotenv(dotenv_path=path if path.exists() else None)


def _main() -> int:
    """Run the zdarwin CLI."""

    _load_env()
    return parse_and_dispatch(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(_main())
