"""Continuous-time pure dephasing of the system qubit."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from zeno_darwin.darwinism.models import dephasing_rate, kappa_closed_form
from zeno_darwin.data import ModelKind
from zeno_darwin.exceptions import OutOfRangeError, UnsupportedModelError
from zeno_darwin.numerics import check_hermitian, ensure_finite, get_tolerances

if TYPE_CHECKING:
    import numpy.typing as npt

    from zeno_darwin.data import ModelParams

    ComplexArray = npt.NDArray[np.complex128]

_LOGGER = logging.getLogger(__name__)

SIGMA_Z = np.diag([1.0, -1.0]).astype(np.complex128)
# gamma * dt used by the integrator when no step count is given
MAX_STEP = 1e-3

ERROR_SHAPE = "Qubit density must be 2x2, got shape {shape}"
ERROR_NON_FINITE = "Qubit density has non-finite entries"
ERROR_TRACE = "Qubit density trace is {trace!r}, expected 1"
ERROR_POSITIVE = "Qubit density has eigenvalue {value!r} below zero"
ERROR_NEGATIVE = "{name} must be >= 0, got {value!r}"
ERROR_STEPS = "steps must be >= 1, got {value!r}"
ERROR_ANTI_ZENO = "The {kind} model has no continuum dephasing limit"


@dataclass(frozen=True, eq=False)
class QubitDensity:
    """Validated 2x2 density matrix."""

    matrix: ComplexArray

    def __post_init__(self) -> None:
        """Check shape, Hermiticity, trace and positivity."""

        matrix = np.array(self.matrix, dtype=np.complex128, copy=True)
        if matrix.shape != (2, 2):
            raise OutOfRangeError(ERROR_SHAPE.format(shape=matrix.shape))
        if not np.all(np.isfinite(matrix)):
            raise OutOfRangeError(ERROR_NON_FINITE)

        tolerances = get_tolerances()
        check_hermitian(matrix)
        trace = complex(np.trace(matrix))
        if abs(trace - 1.0) > tolerances.density_trace:
            raise OutOfRangeError(ERROR_TRACE.format(trace=trace))
        smallest = float(np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)[0])
        if smallest < -tolerances.positivity:
            raise OutOfRangeError(ERROR_POSITIVE.format(value=smallest))

        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def from_amplitudes(cls, alpha: complex, beta: complex) -> QubitDensity:
        """Pure state alpha |down> + beta |up>."""

        vec = np.array([alpha, beta], dtype=np.complex128)
        return cls(np.outer(vec, vec.conj()))

    @property
    def coherence(self) -> complex:
        """Off-diagonal entry rho[down, up]."""

        return complex(self.matrix[0, 1])


def _check_non_negative(value: float, name: str) -> float:
    ensure_finite(value, name)
    if value < 0:
        raise OutOfRangeError(ERROR_NEGATIVE.format(name=name, value=value))
    return float(value)


def dephasing_generator(rho: npt.ArrayLike, gamma: float) -> ComplexArray:
    """d rho / dt = gamma (sigma_z rho sigma_z - rho)."""

    mat = np.asarray(rho, dtype=np.complex128)
    return np.asarray(gamma * (SIGMA_Z @ mat @ SIGMA_Z - mat))


def evolve_dephasing(rho0: QubitDensity, gamma: float, t: float) -> QubitDensity:
    """Exact solution: coherences decay as exp(-2 gamma t)."""

    gamma = _check_non_negative(gamma, "gamma")
    t = _check_non_negative(t, "t")

    decay = math.exp(-2.0 * gamma * t)
    out = np.array(rho0.matrix)
    out[0, 1] *= decay
    out[1, 0] *= decay
    return QubitDensity(out)


def integrate_dephasing(
    rho0: QubitDensity, gamma: float, t: float, steps: int | None = None
) -> QubitDensity:
    """Classical fixed-step RK4 integration of the dephasing equation."""

    gamma = _check_non_negative(gamma, "gamma")
    t = _check_non_negative(t, "t")
    if steps is None:
        steps = max(1, math.ceil(gamma * t / MAX_STEP))
    if steps < 1:
        raise OutOfRangeError(ERROR_STEPS.format(value=steps))

    h = t / steps
    rho = np.array(rho0.matrix)
    for _ in range(steps):
        k1 = dephasing_generator(rho, gamma)
        k2 = dephasing_generator(rho + h / 2 * k1, gamma)
        k3 = dephasing_generator(rho + h / 2 * k2, gamma)
        k4 = dephasing_generator(rho + h * k3, gamma)
        rho = rho + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
    return QubitDensity(rho)


def continuum_consistency(p: ModelParams, n: int) -> float:
    """
    Max relative gap between collisional and continuum coherence decay.

    Compares |kappa|^l against exp(-2 gamma l tau) for l = 0..n, collision l
    being identified with time l tau.
    """

    if p.kind == ModelKind.ANTI_ZENO:
        raise UnsupportedModelError(ERROR_ANTI_ZENO.format(kind=p.kind))
    if n < 0:
        raise OutOfRangeError(ERROR_NEGATIVE.format(name="n", value=n))

    kappa_mod = min(abs(kappa_closed_form(p)), 1.0)
    gamma = dephasing_rate(p)
    ells = np.arange(n + 1, dtype=np.float64)
    discrete = kappa_mod**ells
    continuum = np.exp(-2.0 * gamma * ells * p.tau)
    with np.errstate(divide="ignore", invalid="ignore"):
        gap = np.abs(discrete - continuum) / continuum
    # both sides underflowed to zero
    gap = np.where((continuum == 0) & (discrete == 0), 0.0, gap)
    worst = float(np.max(gap))
    _LOGGER.debug(
        "Continuum gap %s omega*tau=%r n=%d: %.3e", p.kind, p.omega_tau, n, worst
    )
    return worst
