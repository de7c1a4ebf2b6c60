"""Test data models."""

from __future__ import annotations

import math

import pytest
from pydantic import ValidationError

from zeno_darwin.data import (
    HALF_PI,
    NO_DECOHERENCE,
    FixedParams,
    ModelKind,
    ModelParams,
    OutputKind,
    ResultFormat,
    Settings,
    SweepAxis,
    SweepConfig,
    SystemAmplitudes,
)
from zeno_darwin.exceptions import InvalidConfigError, InvalidParamsError


def _config(**overrides: object) -> SweepConfig:
    data: dict[str, object] = {
        "kind": ModelKind.BASE,
        "fixed": FixedParams(tau=0.05),
        "axes": (SweepAxis(param="omega", min=1.0, max=5.0, points=3),),
    }
    data.update(overrides)
    return SweepConfig(**data)


@pytest.mark.parametrize(
    ("kind", "rabi", "detuning"),
    [
        (ModelKind.BASE, 0.0, 0.0),
        (ModelKind.ZENO, 0.7, 0.0),
        (ModelKind.ZENO, HALF_PI, 0.0),
        (ModelKind.ANTI_ZENO, 1.5, 3.0),
        (ModelKind.ANTI_ZENO, 0.0, 0.0),
    ],
)
def test_model_params(kind: ModelKind, rabi: float, detuning: float) -> None:
    """Test valid model parameters."""

    p = ModelParams(kind=kind, omega=5.0, tau=0.05, rabi=rabi, detuning=detuning)

    assert p.omega_tau == pytest.approx(0.25)
    assert p.ancilla_dim == (2 if kind == ModelKind.BASE else 3)


@pytest.mark.parametrize(
    ("values", "field"),
    [
        ({"kind": "base", "rabi": 0.3}, "rabi"),
        ({"kind": "base", "detuning": 0.3}, "detuning"),
        ({"kind": "zeno", "detuning": 0.3}, "detuning"),
        ({"kind": "zeno", "rabi": 2.0}, "rabi"),
        ({"kind": "anti-zeno", "rabi": -0.1}, "rabi"),
        ({"kind": "anti-zeno", "detuning": -1.0}, "detuning"),
        ({"kind": "base", "omega": -1.0}, "omega"),
        ({"kind": "base", "omega": math.inf}, "omega"),
        ({"kind": "base", "tau": 0.0}, "tau"),
        ({"kind": "base", "tau": math.nan}, "tau"),
        ({"kind": "nope"}, "kind"),
        ({"kind": "base", "extra": 1}, "extra"),
    ],
)
def test_model_params_invalid(values: dict[str, object], field: str) -> None:
    """Test invalid model parameters name the field."""

    data: dict[str, object] = {"omega": 5.0, "tau": 0.05, **values}
    with pytest.raises(InvalidParamsError) as ex:
        ModelParams(**data)

    assert ex.value.field == field


def test_model_params_frozen(base_params: ModelParams) -> None:
    """Test model parameters are immutable."""

    with pytest.raises(ValidationError):
        base_params.omega = 1.0  # type: ignore[misc]


def test_system_amplitudes(amps: SystemAmplitudes) -> None:
    """Test amplitude defaults and derived values."""

    assert amps == SystemAmplitudes()
    assert amps.weight_product == pytest.approx(0.25)
    assert amps.vector.tolist() == [amps.alpha, amps.beta]

    tilted = SystemAmplitudes(alpha=0.6, beta=[0.0, 0.8])
    assert tilted.beta == 0.8j
    assert tilted.weight_product == pytest.approx(0.36 * 0.64)
    assert tilted.model_dump(mode="json") == {"alpha": [0.6, 0.0], "beta": [0.0, 0.8]}


@pytest.mark.parametrize(
    "values",
    [
        {"alpha": 1.0, "beta": 1.0},
        {"alpha": "abc"},
        {"alpha": True},
        {"alpha": [math.inf, 0.0]},
    ],
)
def test_system_amplitudes_invalid(values: dict[str, object]) -> None:
    """Test amplitude validation."""

    with pytest.raises(InvalidParamsError) as ex:
        SystemAmplitudes(**values)

    assert ex.value.field == "alpha"


def test_settings(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test settings read the environment."""

    monkeypatch.setenv("ZDARWIN_WORKERS", "4")
    monkeypatch.setenv("ZDARWIN_DELTA", "0.2")
    monkeypatch.setenv("ZDARWIN_OUTPUT_FORMAT", "json")

    settings = Settings()
    assert settings.workers == 4  # noqa: PLR2004
    assert settings.delta == 0.2  # noqa: PLR2004
    assert settings.output_format == ResultFormat.JSON

    monkeypatch.setenv("ZDARWIN_WORKERS", "0")
    with pytest.raises(ValidationError):
        Settings()


def test_sweep_axis() -> None:
    """Test axis grid values include both endpoints."""

    axis = SweepAxis(param="rabi", min=0.0, max=HALF_PI, points=5)

    values = axis.values()
    assert values[0] == 0.0
    assert values[-1] == HALF_PI
    assert len(values) == 5  # noqa: PLR2004

    with pytest.raises(ValidationError):
        SweepAxis(param="rabi", min=1.0, max=0.0, points=5)
    with pytest.raises(ValidationError):
        SweepAxis(param="rabi", min=0.0, max=1.0, points=1)


def test_sweep_config() -> None:
    """Test sweep config grid order and parameters."""

    cfg = _config(
        kind=ModelKind.ANTI_ZENO,
        fixed=FixedParams(omega=5.0, tau=0.05),
        axes=(
            SweepAxis(param="rabi", min=0.0, max=1.0, points=2),
            SweepAxis(param="detuning", min=0.0, max=3.0, points=3),
        ),
        outputs=(OutputKind.REDUNDANCY, OutputKind.KAPPA),
    )

    assert cfg.axis_names == ("rabi", "detuning")
    assert cfg.shape == (2, 3)
    assert cfg.grid() == [
        (0.0, 0.0),
        (0.0, 1.5),
        (0.0, 3.0),
        (1.0, 0.0),
        (1.0, 1.5),
        (1.0, 3.0),
    ]
    assert cfg.outputs == (OutputKind.KAPPA, OutputKind.REDUNDANCY)
    assert cfg.max_fragment == cfg.n_collisions
    assert cfg.params_at((1.0, 1.5)) == ModelParams(
        kind=ModelKind.ANTI_ZENO, omega=5.0, tau=0.05, rabi=1.0, detuning=1.5
    )


def test_sweep_config_surface_cap() -> None:
    """Test the surface is capped by the collision count."""

    assert _config(surface_max_m=20).max_fragment == 20  # noqa: PLR2004
    capped = _config(surface_max_m=20, n_collisions=10)
    assert capped.max_fragment == 10  # noqa: PLR2004


@pytest.mark.parametrize(
    ("overrides", "field"),
    [
        (
            {"axes": (SweepAxis(param="omega", min=-1.0, max=5.0, points=3),)},
            "axes.omega",
        ),
        (
            {
                "axes": (
                    SweepAxis(param="omega", min=1.0, max=5.0, points=3),
                    SweepAxis(param="omega", min=1.0, max=5.0, points=3),
                )
            },
            "axes.omega",
        ),
        ({"fixed": FixedParams(omega=1.0, tau=0.05)}, "axes.omega"),
        ({"fixed": FixedParams()}, "fixed.tau"),
        ({"fixed": FixedParams(tau=0.05, rabi=0.2)}, "fixed.rabi"),
        ({"delta": 1.0}, "delta"),
        ({"n_collisions": 0}, "n_collisions"),
        ({"outputs": ()}, "outputs"),
        ({"axes": ()}, "axes"),
    ],
)
def test_sweep_config_invalid(overrides: dict[str, object], field: str) -> None:
    """Test sweep config errors name the field."""

    with pytest.raises(InvalidConfigError) as ex:
        _config(**overrides)

    assert ex.value.field == field


def test_no_decoherence_sentinel() -> None:
    """Test the sentinel serializes as its name."""

    assert str(NO_DECOHERENCE) == "NoDecoherence"
    assert repr(NO_DECOHERENCE) == "NoDecoherence"
