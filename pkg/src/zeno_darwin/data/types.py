"""Zeno Darwin types."""

from __future__ import annotations

from enum import Enum, StrEnum
from typing import Literal


class ModelKind(StrEnum):
    """Ancilla model."""

    BASE = "base"
    ZENO = "zeno"
    ANTI_ZENO = "anti-zeno"


class OutputKind(StrEnum):
    """Per-point quantities a sweep can record."""

    KAPPA = "kappa"
    REDUNDANCY = "redundancy"
    REDUNDANCY_ESTIMATE = "redundancy_estimate"
    MUTUAL_INFO_SURFACE = "mutual_info_surface"


class FigurePreset(StrEnum):
    """Named figure sweeps."""

    FIG1 = "fig1"
    FIG2 = "fig2"
    FIG3 = "fig3"


class ResultFormat(StrEnum):
    """Result file format."""

    CSV = "csv"
    JSON = "json"


class NoDecoherence(Enum):
    """Sentinel for a system that never lost coherence (zero entropy)."""

    NO_DECOHERENCE = "NoDecoherence"

    def __repr__(self) -> str:
        """Represent as the serialized sentinel."""

        return self.value

    def __str__(self) -> str:
        """Represent as the serialized sentinel."""

        return self.value


NO_DECOHERENCE = NoDecoherence.NO_DECOHERENCE

FragmentSize = int | Literal[NoDecoherence.NO_DECOHERENCE]
SweepParam = Literal["omega", "tau", "rabi", "detuning"]
SWEEP_PARAMS: tuple[SweepParam, ...] = ("omega", "tau", "rabi", "detuning")
