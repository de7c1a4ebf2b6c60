"""
Result serialization.

CSV columns are the swept parameter names followed by, depending on the
requested outputs, `kappa`, `R`, `R_estimate` and `m_delta`. Mutual information
surfaces go to a long-form sibling file `<stem>.surface.csv` with columns
(params..., m, I_bits). JSON carries the same values plus the config echo and
provenance. Fragment sizes of undecohered points are the string
`NoDecoherence`.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
from pathlib import Path
from typing import TYPE_CHECKING, Any

from zeno_darwin.data import NO_DECOHERENCE, FragmentSize, OutputKind, ResultFormat
from zeno_darwin.utils import atomic_write_text, format_float

if TYPE_CHECKING:
    from zeno_darwin.darwinism import DarwinProfile
    from zeno_darwin.data import SweepConfig
    from zeno_darwin.sweep import PointResult, SweepResult

_LOGGER = logging.getLogger(__name__)

SURFACE_SUFFIX = ".surface.csv"
COLUMN_KAPPA = "kappa"
COLUMN_R = "R"
COLUMN_ESTIMATE = "R_estimate"
COLUMN_M_DELTA = "m_delta"
COLUMN_M = "m"
COLUMN_INFO = "I_bits"


def result_columns(cfg: SweepConfig) -> list[str]:
    """CSV header for a sweep result."""

    columns: list[str] = list(cfg.axis_names)
    if OutputKind.KAPPA in cfg.outputs:
        columns.append(COLUMN_KAPPA)
    if OutputKind.REDUNDANCY in cfg.outputs:
        columns.append(COLUMN_R)
    if OutputKind.REDUNDANCY_ESTIMATE in cfg.outputs:
        columns.append(COLUMN_ESTIMATE)
    if OutputKind.REDUNDANCY in cfg.outputs:
        columns.append(COLUMN_M_DELTA)
    return columns


def surface_columns(cfg: SweepConfig) -> list[str]:
    """CSV header for a mutual information surface."""

    return [*cfg.axis_names, COLUMN_M, COLUMN_INFO]


def format_fragment(m_delta: FragmentSize) -> str:
    """Serialize a fragment size or the no-decoherence sentinel."""

    if m_delta is NO_DECOHERENCE:
        return NO_DECOHERENCE.value
    return str(m_delta)


def _point_values(cfg: SweepConfig, point: PointResult) -> dict[str, float | str]:
    values: dict[str, float | str] = dict(
        zip(cfg.axis_names, point.coords, strict=True)
    )
    values[COLUMN_KAPPA] = point.kappa
    values[COLUMN_R] = point.redundancy
    values[COLUMN_ESTIMATE] = point.redundancy_estimate
    values[COLUMN_M_DELTA] = format_fragment(point.m_delta)
    return values


def _csv_text(columns: list[str], rows: list[dict[str, float | str]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(
        buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n"
    )
    writer.writeheader()
    for row in rows:
        writer.writerow(
            {k: format_float(v) if isinstance(v, float) else v for k, v in row.items()}
        )
    return buf.getvalue()


def to_csv(result: SweepResult) -> str:
    """Per-point outputs as CSV."""

    cfg = result.config
    rows = [_point_values(cfg, p) for p in result.points]
    return _csv_text(result_columns(cfg), rows)


def surface_to_csv(result: SweepResult) -> str:
    """Mutual information surface as long-form CSV."""

    cfg = result.config
    rows: list[dict[str, float | str]] = []
    for point in result.points:
        coords = dict(zip(cfg.axis_names, point.coords, strict=True))
        for m, info in enumerate(point.mutual_info_bits or ()):
            rows.append({**coords, COLUMN_M: str(m), COLUMN_INFO: info})
    return _csv_text(surface_columns(cfg), rows)


def _json_float(value: float) -> float | str:
    # JSON has no inf/nan literals
    return value if math.isfinite(value) else format_float(value)


def _json_fragment(m_delta: FragmentSize) -> int | str:
    return NO_DECOHERENCE.value if m_delta is NO_DECOHERENCE else m_delta


def to_json(result: SweepResult, *, include_runtime: bool = True) -> str:
    """
    Sweep result as JSON.

    Without runtime the payload depends only on the config, so repeated runs
    produce identical text.
    """

    cfg = result.config
    columns = result_columns(cfg)
    points: list[dict[str, Any]] = []
    for point in result.points:
        values = _point_values(cfg, point)
        entry: dict[str, Any] = {
            k: _json_float(v) if isinstance(v, float) else v
            for k, v in values.items()
            if k in columns
        }
        if COLUMN_M_DELTA in entry:
            entry[COLUMN_M_DELTA] = _json_fragment(point.m_delta)
        if point.mutual_info_bits is not None:
            entry[COLUMN_INFO] = [_json_float(v) for v in point.mutual_info_bits]
        points.append(entry)

    payload: dict[str, Any] = {
        "format_version": result.format_version,
        "generated_by": result.generated_by,
        "config": cfg.model_dump(mode="json"),
        "columns": columns,
        "points": points,
    }
    if include_runtime:
        payload["runtime"] = {"seconds": result.runtime_seconds}
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def render_result(result: SweepResult, fmt: ResultFormat) -> str:
    """Result text for standard output."""

    if fmt == ResultFormat.JSON:
        return to_json(result)
    return to_csv(result)


def surface_path(path: Path) -> Path:
    """Sibling file holding the surface of a CSV result."""

    return path.with_name(path.stem + SURFACE_SUFFIX)


def write_result(result: SweepResult, path: Path, fmt: ResultFormat) -> list[Path]:
    """Write result files atomically, returning every path written."""

    path = Path(path)
    # nothing is written unless every file rendered
    texts = {path: render_result(result, fmt)}
    if fmt == ResultFormat.CSV and result.has_surface:
        texts[surface_path(path)] = surface_to_csv(result)

    for target, text in texts.items():
        atomic_write_text(target, text)
    written = list(texts)

    _LOGGER.info("Wrote %s", ", ".join(str(p) for p in written))
    return written


def profile_to_csv(profile: DarwinProfile) -> str:
    """Mutual information profile as (m, I_bits) CSV."""

    rows: list[dict[str, float | str]] = [
        {COLUMN_M: str(m), COLUMN_INFO: float(v)}
        for m, v in enumerate(profile.mutual_info_bits)
    ]
    return _csv_text([COLUMN_M, COLUMN_INFO], rows)


def profile_to_json(profile: DarwinProfile) -> str:
    """Mutual information profile and its summary as JSON."""

    payload = {
        "n_collisions": profile.n_collisions,
        "n_ancillas": profile.n_ancillas,
        "kappa": profile.kappa,
        "delta": profile.delta,
        "system_entropy_bits": profile.system_entropy_bits,
        "m_delta": _json_fragment(profile.m_delta),
        "R": profile.redundancy,
        "R_estimate": _json_float(profile.redundancy_estimate),
        "mutual_info_bits": [float(v) for v in profile.mutual_info_bits],
    }
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def write_profile(profile: DarwinProfile, path: Path, fmt: ResultFormat) -> Path:
    """Write a profile atomically."""

    if fmt == ResultFormat.JSON:
        text = profile_to_json(profile)
    else:
        text = profile_to_csv(profile)
    atomic_write_text(Path(path), text)
    _LOGGER.info("Wrote %s", path)
    return Path(path)
