"""Test utils."""

from __future__ import annotations

import math
from datetime import timedelta
from typing import TYPE_CHECKING
from unittest.mock import patch

import pytest

from zeno_darwin.utils import atomic_write_text, format_float, human_format

if TYPE_CHECKING:
    from pathlib import Path


@pytest.mark.parametrize(
    ("in_", "out"),
    [
        (0.0, "0"),
        (1.0, "1"),
        (0.5, "0.5"),
        (0.1, "0.10000000000000001"),
        (math.inf, "inf"),
        (-math.inf, "-inf"),
        (math.nan, "nan"),
    ],
)
def test_format_float(in_: float, out: str) -> None:
    """Test format_float."""

    assert format_float(in_) == out


@pytest.mark.parametrize("value", [math.pi, 1e-300, 130.58412, -2.5e17])
def test_format_float_exact(value: float) -> None:
    """Test format_float keeps every bit."""

    assert float(format_float(value)) == value


@pytest.mark.parametrize(
    ("in_", "out"),
    [
        (timedelta(minutes=2), "2 minutes"),
        (timedelta(hours=3), "3 hours"),
        (30, "30 seconds"),
    ],
)
def test_human_format(in_: float | timedelta, out: str) -> None:
    """Test human_format."""

    assert human_format(in_) == out


def test_atomic_write_text(temp_dir: Path) -> None:
    """Test atomic_write_text creates parents and replaces content."""

    path = temp_dir / "nested" / "out.csv"
    atomic_write_text(path, "a,b\n")
    atomic_write_text(path, "c,d\n")

    assert path.read_text(encoding="utf-8") == "c,d\n"
    assert [p.name for p in path.parent.iterdir()] == ["out.csv"]


def test_atomic_write_text_failure(temp_dir: Path) -> None:
    """Test atomic_write_text leaves nothing behind on failure."""

    path = temp_dir / "out.csv"
    path.write_text("old\n", encoding="utf-8")

    with (
        patch("zeno_darwin.utils.Path.replace", side_effect=OSError("disk full")),
        pytest.raises(OSError, match="disk full"),
    ):
        atomic_write_text(path, "new\n")

    assert path.read_text(encoding="utf-8") == "old\n"
    assert [p.name for p in temp_dir.iterdir()] == ["out.csv"]
