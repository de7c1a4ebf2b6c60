"""CLI converters from flags to domain objects."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

from rich.console import Console

from zeno_darwin.cli.context import get_core_context
from zeno_darwin.data import (
    ModelKind,
    ModelParams,
    ResultFormat,
    Settings,
    SystemAmplitudes,
)
from zeno_darwin.exceptions import InvalidParamsError, UsageError
from zeno_darwin.results import render_result, write_result

if TYPE_CHECKING:
    from pathlib import Path

    from zeno_darwin.cli.options import FormatName, ModelName
    from zeno_darwin.sweep import SweepResult

ERROR_FLAG = "--{flag}: {error}"
ERROR_AMPLITUDE = "|amplitude| must not exceed 1, got {value!r}"
ERROR_DELTA = "delta must lie in (0, 1), got {value!r}"
ERROR_WORKERS = "workers must be >= 1, got {value!r}"


def flag_error(flag: str, error: object) -> UsageError:
    """Usage error naming the offending flag."""

    return UsageError(ERROR_FLAG.format(flag=flag.replace("_", "-"), error=error))


def get_settings() -> Settings:
    """Settings of the running CLI, read from the environment otherwise."""

    context = get_core_context()
    if context is None:
        return Settings()
    return context.settings


def build_params(
    model: ModelName,
    omega: float,
    tau: float,
    rabi: float | None,
    detuning: float | None,
) -> ModelParams:
    """Validate model flags."""

    try:
        return ModelParams(
            kind=ModelKind(model),
            omega=omega,
            tau=tau,
            rabi=rabi or 0.0,
            detuning=detuning or 0.0,
        )
    except InvalidParamsError as ex:
        raise flag_error(ex.field or "model", ex) from ex


def build_amplitudes(alpha: float | None, beta: float | None) -> SystemAmplitudes:
    """
    Validate amplitude flags.

    Either one alone fixes the other as the non-negative root completing the norm.
    """

    for flag, value in (("alpha", alpha), ("beta", beta)):
        if value is not None and not 0.0 <= abs(value) <= 1.0:
            raise flag_error(flag, ERROR_AMPLITUDE.format(value=value))

    if alpha is None:
        if beta is None:
            return SystemAmplitudes.uniform()
        alpha = math.sqrt(1.0 - beta**2)
    elif beta is None:
        beta = math.sqrt(1.0 - alpha**2)

    try:
        return SystemAmplitudes(alpha=alpha, beta=beta)
    except InvalidParamsError as ex:
        raise flag_error(ex.field or "alpha", ex) from ex


def resolve_delta(delta: float | None) -> float:
    """Flag value, or the configured default."""

    if delta is None:
        return get_settings().delta
    if not 0.0 < delta < 1.0:
        raise flag_error("delta", ERROR_DELTA.format(value=delta))
    return delta


def resolve_workers(workers: int | None) -> int:
    """Flag value, or the configured default."""

    if workers is None:
        return get_settings().workers
    if workers < 1:
        raise flag_error("workers", ERROR_WORKERS.format(value=workers))
    return workers


def resolve_format(output_format: FormatName | None) -> ResultFormat:
    """Flag value, or the configured default."""

    if output_format is None:
        return get_settings().output_format
    return ResultFormat(output_format)


def emit_result(
    result: SweepResult, out: Path | None, output_format: FormatName | None
) -> None:
    """Write result files, or print the main table to standard output."""

    fmt = resolve_format(output_format)
    if out is not None:
        write_result(result, out, fmt)
        return

    if result.has_surface and fmt == ResultFormat.CSV:
        Console(stderr=True).print(
            "Mutual information surface is only written with --out", markup=False
        )
    print(render_result(result, fmt), end="")
