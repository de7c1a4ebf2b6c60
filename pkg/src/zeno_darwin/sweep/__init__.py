"""Parameter sweeps and figure presets."""

from zeno_darwin.sweep.presets import figure_preset
from zeno_darwin.sweep.runner import (
    FORMAT_VERSION,
    PointResult,
    SweepResult,
    evaluate_point,
    run_sweep,
)

__all__ = [
    "FORMAT_VERSION",
    "PointResult",
    "SweepResult",
    "evaluate_point",
    "figure_preset",
    "run_sweep",
]
