"""Zeno Darwin data."""

from zeno_darwin.data.models import (
    DEFAULT_COLLISIONS,
    DEFAULT_DELTA,
    DEFAULT_OUTPUTS,
    HALF_PI,
    UNIFORM_AMPLITUDE,
    ComplexScalar,
    FixedParams,
    ModelParams,
    Settings,
    SweepAxis,
    SweepConfig,
    SystemAmplitudes,
    ValidationIssue,
    first_issue,
)
from zeno_darwin.data.types import (
    NO_DECOHERENCE,
    SWEEP_PARAMS,
    FigurePreset,
    FragmentSize,
    ModelKind,
    NoDecoherence,
    OutputKind,
    ResultFormat,
    SweepParam,
)

__all__ = [
    "DEFAULT_COLLISIONS",
    "DEFAULT_DELTA",
    "DEFAULT_OUTPUTS",
    "HALF_PI",
    "NO_DECOHERENCE",
    "SWEEP_PARAMS",
    "UNIFORM_AMPLITUDE",
    "ComplexScalar",
    "FigurePreset",
    "FixedParams",
    "FragmentSize",
    "ModelKind",
    "ModelParams",
    "NoDecoherence",
    "OutputKind",
    "ResultFormat",
    "Settings",
    "SweepAxis",
    "SweepConfig",
    "SweepParam",
    "SystemAmplitudes",
    "ValidationIssue",
    "first_issue",
]
