"""Tests conftest."""

from __future__ import annotations

import tempfile
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np
import pytest

from zeno_darwin.cli.context import set_core_context
from zeno_darwin.data import ModelKind, ModelParams, SystemAmplitudes

if TYPE_CHECKING:
    from collections.abc import Generator

SEED = 20_240_917


@pytest.fixture(name="temp_dir")
def temp_dir_fixture() -> Generator[Path]:
    """Return temp dir for IO operations."""

    with tempfile.TemporaryDirectory() as path:
        yield Path(path)


@pytest.fixture(name="amps")
def amps_fixture() -> SystemAmplitudes:
    """Equal superposition system state."""

    return SystemAmplitudes.uniform()


@pytest.fixture(name="rng")
def rng_fixture() -> np.random.Generator:
    """Seeded random generator."""

    return np.random.default_rng(SEED)


@pytest.fixture(name="base_params")
def base_params_fixture() -> ModelParams:
    """Base model at omega tau = 0.25."""

    return ModelParams(kind=ModelKind.BASE, omega=5.0, tau=0.05)


@pytest.fixture(autouse=True)
def reset_cli_context() -> Generator[None]:
    """Drop CLI context left over by a previous invocation."""

    yield

    set_core_context(None)
