"""Zeno Darwin models."""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Annotated, Any

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    PlainSerializer,
    PlainValidator,
    ValidationError,
    ValidationInfo,
    field_validator,
    model_validator,
)
from pydantic_settings import BaseSettings, SettingsConfigDict

from zeno_darwin.data.types import (  # required for Pydantic # noqa: TC001
    ModelKind,
    OutputKind,
    ResultFormat,
    SweepParam,
)
from zeno_darwin.exceptions import InvalidConfigError, InvalidParamsError
from zeno_darwin.numerics import get_tolerances

if TYPE_CHECKING:
    from collections.abc import Sequence

    import numpy.typing as npt

HALF_PI = math.pi / 2
UNIFORM_AMPLITUDE = math.sqrt(0.5)
DEFAULT_DELTA = 0.1
DEFAULT_COLLISIONS = 1000
DEFAULT_OUTPUTS = (OutputKind.REDUNDANCY, OutputKind.REDUNDANCY_ESTIMATE)

ERROR_COMPLEX = "Expected a number, a complex string or a [re, im] pair, got {value!r}"
ERROR_COMPLEX_FINITE = "Complex value must be finite, got {value!r}"
ERROR_NORM = "|alpha|^2 + |beta|^2 = {total!r}, expected 1"
ERROR_KIND_FIELD = "{field} must be 0 for the {kind} model, got {value!r}"
ERROR_AXIS_RANGE = "Axis {param}: min ({min!r}) is greater than max ({max!r})"
ERROR_AXIS_DUPLICATE = "Axis {param} is given more than once"
ERROR_AXIS_FIXED = "Axis {param} is also set under fixed"
ERROR_AXIS_DOMAIN = "Axis {param}: range [{min!r}, {max!r}] leaves its domain: {reason}"
ERROR_MISSING_PARAM = "{param} must be set under fixed or as an axis"
ERROR_INVALID_PARAMS = "Invalid {field}: {msg}"


def convert_complex(value: Any) -> complex:  # noqa: ANN401
    """Convert number, string or [re, im] pair into a finite complex."""

    if isinstance(value, bool):
        raise ValueError(ERROR_COMPLEX.format(value=value))  # noqa: TRY004

    if isinstance(value, complex | int | float):
        out = complex(value)
    elif isinstance(value, str):
        try:
            out = complex(value.replace(" ", ""))
        except ValueError as ex:
            raise ValueError(ERROR_COMPLEX.format(value=value)) from ex
    elif isinstance(value, list | tuple) and len(value) == 2:  # noqa: PLR2004
        out = complex(float(value[0]), float(value[1]))
    else:
        raise ValueError(ERROR_COMPLEX.format(value=value))

    if not cmath.isfinite(out):
        raise ValueError(ERROR_COMPLEX_FINITE.format(value=value))
    return out


def serialize_complex(value: complex) -> list[float]:
    """Serialize complex as [re, im]."""

    return [value.real, value.imag]


ComplexScalar = Annotated[
    complex,
    PlainValidator(convert_complex),
    PlainSerializer(serialize_complex, return_type=list[float]),
]
FiniteFloat = Annotated[float, Field(allow_inf_nan=False)]


@dataclass(frozen=True)
class ValidationIssue:
    """First problem of a pydantic validation error, flattened."""

    loc: tuple[int | str, ...]
    field: str | None
    message: str


def first_issue(ex: ValidationError) -> ValidationIssue:
    """Flatten the first error of a `ValidationError`."""

    error = ex.errors()[0]
    loc = tuple(error["loc"])
    cause = (error.get("ctx") or {}).get("error")
    if isinstance(cause, InvalidParamsError | InvalidConfigError):
        return ValidationIssue(loc=loc, field=cause.field, message=str(cause))

    field = ".".join(str(p) for p in loc) or None
    return ValidationIssue(loc=loc, field=field, message=error["msg"])


class ModelParams(BaseModel):
    """Parameters of one collision model."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    # must stay first, the field validators below read it
    kind: ModelKind = ModelKind.BASE
    omega: float = Field(ge=0, allow_inf_nan=False)
    tau: float = Field(gt=0, allow_inf_nan=False)
    rabi: float = Field(default=0.0, ge=0, le=HALF_PI, allow_inf_nan=False)
    detuning: float = Field(default=0.0, ge=0, allow_inf_nan=False)

    def __init__(self, **data: Any) -> None:  # noqa: ANN401
        """Validate, raising `InvalidParamsError` naming the bad field."""

        try:
            super().__init__(**data)
        except ValidationError as ex:
            issue = first_issue(ex)
            raise InvalidParamsError(
                ERROR_INVALID_PARAMS.format(field=issue.field, msg=issue.message),
                field=issue.field,
            ) from ex

    @field_validator("rabi")
    @classmethod
    def _check_rabi(cls, value: float, info: ValidationInfo) -> float:
        if info.data.get("kind") == ModelKind.BASE and value != 0:
            raise InvalidParamsError(
                ERROR_KIND_FIELD.format(field="rabi", kind=ModelKind.BASE, value=value),
                field="rabi",
            )
        return value

    @field_validator("detuning")
    @classmethod
    def _check_detuning(cls, value: float, info: ValidationInfo) -> float:
        kind = info.data.get("kind")
        if kind in (ModelKind.BASE, ModelKind.ZENO) and value != 0:
            raise InvalidParamsError(
                ERROR_KIND_FIELD.format(field="detuning", kind=kind, value=value),
                field="detuning",
            )
        return value

    @property
    def omega_tau(self) -> float:
        """Dimensionless collision strength."""

        return self.omega * self.tau

    @property
    def ancilla_dim(self) -> int:
        """Ancilla Hilbert space dimension."""

        return 2 if self.kind == ModelKind.BASE else 3


class SystemAmplitudes(BaseModel):
    """Pointer-basis amplitudes (alpha |down> + beta |up>) of the system qubit."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    alpha: ComplexScalar = complex(UNIFORM_AMPLITUDE)
    beta: ComplexScalar = complex(UNIFORM_AMPLITUDE)

    def __init__(self, **data: Any) -> None:  # noqa: ANN401
        """Validate, raising `InvalidParamsError` naming the bad field."""

        try:
            super().__init__(**data)
        except ValidationError as ex:
            issue = first_issue(ex)
            raise InvalidParamsError(
                ERROR_INVALID_PARAMS.format(field=issue.field, msg=issue.message),
                field=issue.field,
            ) from ex

    @model_validator(mode="after")
    def _check_norm(self) -> SystemAmplitudes:
        total = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(total - 1.0) > get_tolerances().unit_norm:
            raise InvalidParamsError(ERROR_NORM.format(total=total), field="alpha")
        return self

    @classmethod
    def uniform(cls) -> SystemAmplitudes:
        """Equal superposition, the default."""

        return cls()

    @property
    def weight_product(self) -> float:
        """|alpha|^2 |beta|^2."""

        return abs(self.alpha) ** 2 * abs(self.beta) ** 2

    @property
    def vector(self) -> npt.NDArray[np.complex128]:
        """System state in the (down, up) basis."""

        return np.array([self.alpha, self.beta], dtype=np.complex128)


class Settings(BaseSettings):
    """Zeno Darwin runtime settings."""

    model_config = SettingsConfigDict(env_prefix="ZDARWIN_")

    workers: int = Field(default=1, ge=1)
    delta: float = Field(default=DEFAULT_DELTA, gt=0, lt=1)
    output_format: ResultFormat = ResultFormat.CSV


class SweepAxis(BaseModel):
    """One swept parameter, sampled on an inclusive linear grid."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    param: SweepParam
    min: FiniteFloat
    max: FiniteFloat
    points: int = Field(ge=2)

    @model_validator(mode="after")
    def _check_range(self) -> SweepAxis:
        if self.min > self.max:
            raise InvalidConfigError(
                ERROR_AXIS_RANGE.format(param=self.param, min=self.min, max=self.max),
                field=f"axes.{self.param}",
            )
        return self

    def values(self) -> npt.NDArray[np.float64]:
        """Grid coordinates, endpoints included exactly."""

        return np.linspace(self.min, self.max, self.points, dtype=np.float64)


class FixedParams(BaseModel):
    """Model parameters held constant over a sweep."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    omega: FiniteFloat | None = None
    tau: FiniteFloat | None = None
    rabi: FiniteFloat | None = None
    detuning: FiniteFloat | None = None


class SweepConfig(BaseModel):
    """Parameter grid to evaluate."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: ModelKind
    fixed: FixedParams = FixedParams()
    axes: tuple[SweepAxis, ...] = Field(min_length=1, max_length=2)
    n_collisions: int = Field(default=DEFAULT_COLLISIONS, ge=1)
    delta: float = Field(default=DEFAULT_DELTA, gt=0, lt=1)
    amplitudes: SystemAmplitudes = SystemAmplitudes()
    outputs: tuple[OutputKind, ...] = Field(default=DEFAULT_OUTPUTS, min_length=1)
    # largest fragment size recorded in the surface, n_collisions if unset
    surface_max_m: int | None = Field(default=None, ge=0)

    def __init__(self, **data: Any) -> None:  # noqa: ANN401
        """Validate, raising `InvalidConfigError` naming the bad field."""

        try:
            super().__init__(**data)
        except ValidationError as ex:
            issue = first_issue(ex)
            raise InvalidConfigError(issue.message, field=issue.field) from ex

    @field_validator("outputs")
    @classmethod
    def _canonical_outputs(
        cls, value: tuple[OutputKind, ...]
    ) -> tuple[OutputKind, ...]:
        # a set semantically, kept in declaration order so dumps are stable
        return tuple(o for o in OutputKind if o in value)

    @model_validator(mode="after")
    def _check_axes(self) -> SweepConfig:
        seen: set[str] = set()
        fixed = self.fixed.model_dump(exclude_none=True)
        for axis in self.axes:
            if axis.param in seen:
                raise InvalidConfigError(
                    ERROR_AXIS_DUPLICATE.format(param=axis.param),
                    field=f"axes.{axis.param}",
                )
            if axis.param in fixed:
                raise InvalidConfigError(
                    ERROR_AXIS_FIXED.format(param=axis.param),
                    field=f"axes.{axis.param}",
                )
            seen.add(axis.param)

        for required in ("omega", "tau"):
            if required not in seen and required not in fixed:
                raise InvalidConfigError(
                    ERROR_MISSING_PARAM.format(param=required),
                    field=f"fixed.{required}",
                )

        # validity domains are intervals, so checking the grid corners suffices
        corners = itertools.product(*[(a.min, a.max) for a in self.axes])
        for corner in corners:
            try:
                self.params_at(corner)
            except InvalidParamsError as ex:
                axis = next((a for a in self.axes if a.param == ex.field), None)
                if axis is None:
                    raise InvalidConfigError(str(ex), field=f"fixed.{ex.field}") from ex
                raise InvalidConfigError(
                    ERROR_AXIS_DOMAIN.format(
                        param=axis.param, min=axis.min, max=axis.max, reason=ex
                    ),
                    field=f"axes.{axis.param}",
                ) from ex
        return self

    @property
    def axis_names(self) -> tuple[SweepParam, ...]:
        """Swept parameter names, slowest first."""

        return tuple(a.param for a in self.axes)

    @property
    def shape(self) -> tuple[int, ...]:
        """Grid shape."""

        return tuple(a.points for a in self.axes)

    @property
    def max_fragment(self) -> int:
        """Largest m recorded in mutual information surfaces."""

        if self.surface_max_m is None:
            return self.n_collisions
        return min(self.surface_max_m, self.n_collisions)

    def grid(self) -> list[tuple[float, ...]]:
        """Grid coordinates in row-major order (first axis slowest)."""

        values = [a.values().tolist() for a in self.axes]
        return list(itertools.product(*values))

    def params_at(self, coords: Sequence[float]) -> ModelParams:
        """Model parameters at a grid point."""

        values: dict[str, Any] = self.fixed.model_dump(exclude_none=True)
        values.update(zip(self.axis_names, coords, strict=True))
        return ModelParams(kind=self.kind, **values)
