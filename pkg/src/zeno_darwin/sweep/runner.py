"""Sweep runner."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import TYPE_CHECKING

from zeno_darwin.darwinism import (
    fragment_size_for_deficit,
    kappa_closed_form,
    mutual_information_curve,
    redundancy_estimate,
)
from zeno_darwin.data import (
    NO_DECOHERENCE,
    FragmentSize,
    OutputKind,
    Settings,
    SweepConfig,
)
from zeno_darwin.exceptions import InvalidConfigError
from zeno_darwin.log import init_worker_logging, worker_setup
from zeno_darwin.utils import VERSION, human_format

if TYPE_CHECKING:
    from collections.abc import Sequence

_LOGGER = logging.getLogger(__name__)

FORMAT_VERSION = "1"

ERROR_WORKERS = "workers must be >= 1, got {value!r}"
ERROR_CONFIG_TYPE = "Expected a SweepConfig, got {value!r}"


@dataclass(frozen=True)
class PointResult:
    """Outputs at one grid point."""

    coords: tuple[float, ...]
    kappa: float
    m_delta: FragmentSize
    redundancy: float
    redundancy_estimate: float
    # I(S, F_m) for m = 0..config.max_fragment, when the surface is requested
    mutual_info_bits: tuple[float, ...] | None = None


@dataclass(frozen=True)
class SweepResult:
    """Every grid point of a sweep, in grid order, with provenance."""

    config: SweepConfig
    points: tuple[PointResult, ...]
    runtime_seconds: float = field(default=0.0, compare=False)
    generated_by: str = VERSION
    format_version: str = FORMAT_VERSION

    @property
    def has_surface(self) -> bool:
        """Whether mutual information surfaces were recorded."""

        return OutputKind.MUTUAL_INFO_SURFACE in self.config.outputs


def evaluate_point(cfg: SweepConfig, coords: Sequence[float]) -> PointResult:
    """Evaluate one grid point, independent of every other point."""

    p = cfg.params_at(coords)
    n = cfg.n_collisions
    kappa = kappa_closed_form(p)
    kappa_mod = min(abs(kappa), 1.0)

    m_delta = fragment_size_for_deficit(kappa_mod, n, cfg.delta, cfg.amplitudes)
    surface = None
    if OutputKind.MUTUAL_INFO_SURFACE in cfg.outputs:
        curve = mutual_information_curve(
            kappa_mod, n, cfg.max_fragment, cfg.amplitudes
        )
        surface = tuple(float(v) for v in curve)

    return PointResult(
        coords=tuple(float(c) for c in coords),
        kappa=kappa,
        m_delta=m_delta,
        redundancy=0.0 if m_delta is NO_DECOHERENCE else n / m_delta,
        redundancy_estimate=redundancy_estimate(kappa_mod, n),
        mutual_info_bits=surface,
    )


def run_sweep(cfg: SweepConfig, workers: int | None = None) -> SweepResult:
    """
    Evaluate every grid point of `cfg`.

    With more than one worker points are spread over a process pool; results
    keep grid order, so output does not depend on the worker count.
    """

    if not isinstance(cfg, SweepConfig):
        raise InvalidConfigError(ERROR_CONFIG_TYPE.format(value=cfg), field="config")
    if workers is None:
        workers = Settings().workers
    if workers < 1:
        raise InvalidConfigError(ERROR_WORKERS.format(value=workers), field="workers")

    grid = cfg.grid()
    _LOGGER.info(
        "Sweeping %s over %s (%d points, %d workers)",
        cfg.kind,
        " x ".join(cfg.axis_names),
        len(grid),
        workers,
    )

    start = time.perf_counter()
    task = partial(evaluate_point, cfg)
    if workers > 1 and len(grid) > 1:
        chunksize = max(1, len(grid) // (workers * 4))
        with ProcessPoolExecutor(
            max_workers=workers,
            initializer=init_worker_logging,
            initargs=(worker_setup(),),
        ) as pool:
            points = tuple(pool.map(task, grid, chunksize=chunksize))
    else:
        points = tuple(task(coords) for coords in grid)

    runtime = time.perf_counter() - start
    _LOGGER.info("Sweep finished in %s", human_format(runtime))
    return SweepResult(config=cfg, points=points, runtime_seconds=runtime)
