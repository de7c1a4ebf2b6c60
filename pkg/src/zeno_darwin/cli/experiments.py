"""Sweep commands."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Annotated, Literal

from cyclopts import Parameter

from zeno_darwin.cli.converters import (
    emit_result,
    flag_error,
    resolve_delta,
    resolve_workers,
)
from zeno_darwin.cli.options import (
    OPTION_DELTA,
    OPTION_FORMAT,
    OPTION_OPTIONAL_N,
    OPTION_OUT,
    OPTION_POINTS,
    OPTION_WORKERS,
)
from zeno_darwin.config import load_config
from zeno_darwin.data import SweepConfig
from zeno_darwin.sweep import figure_preset, run_sweep

_LOGGER = logging.getLogger(__name__)

ERROR_POINTS = "must be >= 2, got {value!r}"
ERROR_N = "must be >= 1, got {value!r}"

FigureName = Literal["fig1", "fig2", "fig3"]


def sweep(
    config: Annotated[Path, Parameter(help="YAML sweep config.")],
    *,
    workers: OPTION_WORKERS = None,
    out: OPTION_OUT = None,
    output_format: OPTION_FORMAT = None,
) -> None:
    """Evaluate every grid point of a sweep config."""

    cfg = load_config(config)
    result = run_sweep(cfg, workers=resolve_workers(workers))
    emit_result(result, out, output_format)


def _override(
    cfg: SweepConfig, delta: float | None, points: int | None, n: int | None
) -> SweepConfig:
    data = cfg.model_dump()
    if delta is not None:
        data["delta"] = resolve_delta(delta)
    if points is not None:
        if points < 2:  # noqa: PLR2004
            raise flag_error("points", ERROR_POINTS.format(value=points))
        data["axes"] = [{**axis, "points": points} for axis in data["axes"]]
    if n is not None:
        if n < 1:
            raise flag_error("n", ERROR_N.format(value=n))
        data["n_collisions"] = n
        surface_max_m = data.get("surface_max_m")
        if surface_max_m is not None:
            data["surface_max_m"] = min(surface_max_m, n)

    return SweepConfig(**data)


def figure(  # noqa: PLR0913
    name: Annotated[FigureName, Parameter(help="Figure preset.")],
    *,
    delta: OPTION_DELTA = None,
    points: OPTION_POINTS = None,
    n: OPTION_OPTIONAL_N = None,
    workers: OPTION_WORKERS = None,
    out: OPTION_OUT = None,
    output_format: OPTION_FORMAT = None,
) -> None:
    """
    Regenerate the data behind a figure.

    fig1: base model over omega. fig2: Zeno model over the Rabi rate.
    fig3: anti-Zeno model over Rabi rate and detuning.
    """

    cfg = _override(figure_preset(name), delta, points, n)
    result = run_sweep(cfg, workers=resolve_workers(workers))
    emit_result(result, out, output_format)
