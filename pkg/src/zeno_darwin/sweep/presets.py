"""Figure sweep presets."""

from __future__ import annotations

import math

from zeno_darwin.data import (
    HALF_PI,
    FigurePreset,
    FixedParams,
    ModelKind,
    OutputKind,
    SweepAxis,
    SweepConfig,
)
from zeno_darwin.exceptions import UnknownPresetError

PRESET_TAU = 0.05
PRESET_OMEGA = 5.0
POINTS_1D = 512
POINTS_2D = 128
MAX_DETUNING = 3.0
# fragment sizes kept in preset mutual information surfaces
SURFACE_MAX_M = 100

ERROR_UNKNOWN_PRESET = "Unknown figure preset {name!r}, expected one of: {names}"

_CURVE_OUTPUTS = (
    OutputKind.REDUNDANCY,
    OutputKind.REDUNDANCY_ESTIMATE,
    OutputKind.MUTUAL_INFO_SURFACE,
)


def _fig1() -> SweepConfig:
    # omega runs up to 2 omega tau = pi, skipping omega = 0
    omega_max = math.pi / (2 * PRESET_TAU)
    return SweepConfig(
        kind=ModelKind.BASE,
        fixed=FixedParams(tau=PRESET_TAU),
        axes=(
            SweepAxis(
                param="omega",
                min=omega_max / POINTS_1D,
                max=omega_max,
                points=POINTS_1D,
            ),
        ),
        outputs=_CURVE_OUTPUTS,
        surface_max_m=SURFACE_MAX_M,
    )


def _fig2() -> SweepConfig:
    return SweepConfig(
        kind=ModelKind.ZENO,
        fixed=FixedParams(omega=PRESET_OMEGA, tau=PRESET_TAU),
        axes=(SweepAxis(param="rabi", min=0.0, max=HALF_PI, points=POINTS_1D),),
        outputs=_CURVE_OUTPUTS,
        surface_max_m=SURFACE_MAX_M,
    )


def _fig3() -> SweepConfig:
    return SweepConfig(
        kind=ModelKind.ANTI_ZENO,
        fixed=FixedParams(omega=PRESET_OMEGA, tau=PRESET_TAU),
        axes=(
            SweepAxis(param="rabi", min=0.0, max=HALF_PI, points=POINTS_2D),
            SweepAxis(param="detuning", min=0.0, max=MAX_DETUNING, points=POINTS_2D),
        ),
        outputs=(OutputKind.REDUNDANCY, OutputKind.REDUNDANCY_ESTIMATE),
    )


_PRESETS = {
    FigurePreset.FIG1: _fig1,
    FigurePreset.FIG2: _fig2,
    FigurePreset.FIG3: _fig3,
}


def figure_preset(name: FigurePreset | str) -> SweepConfig:
    """
    Get sweep config for a figure.

    All presets run n = 1000 collisions with delta = 0.1 and uniform amplitudes.
    """

    try:
        preset = FigurePreset(name)
    except ValueError as ex:
        names = ", ".join(p.value for p in FigurePreset)
        raise UnknownPresetError(
            ERROR_UNKNOWN_PRESET.format(name=name, names=names), field="preset"
        ) from ex

    return _PRESETS[preset]()
