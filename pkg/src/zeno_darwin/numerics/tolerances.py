"""Numerical tolerances shared by every module."""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Generator


@dataclass(frozen=True)
class Tolerances:
    """Absolute tolerances used by validation and invariant checks."""

    hermitian: float = 1e-12
    orthonormal: float = 1e-10
    reconstruction: float = 1e-10
    unitary: float = 1e-12
    unit_norm: float = 1e-12
    # eigenvalues/probabilities this close below zero are noise
    probability_clamp: float = 1e-12
    normalization: float = 1e-9
    trace: float = 1e-10
    density_trace: float = 1e-12
    positivity: float = 1e-10
    # below this system entropy (bits) the state is treated as undecohered
    min_entropy: float = 1e-12


_TOLERANCES = Tolerances()


def get_tolerances() -> Tolerances:
    """Get active tolerances."""

    return _TOLERANCES


@contextmanager
def override_tolerances(**changes: float) -> Generator[Tolerances]:
    """Temporarily replace some tolerances."""

    global _TOLERANCES  # noqa: PLW0603

    previous = _TOLERANCES
    _TOLERANCES = replace(previous, **changes)
    try:
        yield _TOLERANCES
    finally:
        _TOLERANCES = previous
