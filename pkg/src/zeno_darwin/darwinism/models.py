"""
Ancilla models.

Base ancillas are qubits in the basis (a, b). Zeno and anti-Zeno ancillas are
qutrits in the basis (c, b, a), where the extra level c is Rabi-coupled to a.
Every ancilla starts in |a>. When the system is |down> the ancilla ends in the
`plus` branch, when it is |up> in the `minus` branch.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from zeno_darwin.data import ModelKind, ModelParams
from zeno_darwin.exceptions import OutOfRangeError, UnsupportedModelError
from zeno_darwin.numerics import SmallMatrix, Spectrum, get_tolerances, unitary_exp

if TYPE_CHECKING:
    import numpy.typing as npt

    ComplexVector = npt.NDArray[np.complex128]

_LOGGER = logging.getLogger(__name__)

QUBIT_A = 0
QUTRIT_A = 2

ERROR_BRANCH_NORM = "Branch {name} has norm {norm!r}, expected 1"
ERROR_KAPPA_BOUND = "|kappa| = {value!r} exceeds 1"
ERROR_KAPPA_RANGE = "kappa modulus must lie in [0, 1], got {value!r}"
ERROR_NO_RATE = "No closed-form dephasing rate exists for the {kind} model"
ERROR_RABI_RANGE = "rabi must lie in [0, pi/2], got {value!r}"


def ket_a(dim: int) -> ComplexVector:
    """Initial ancilla state |a> for a qubit or qutrit ancilla."""

    vec = np.zeros(dim, dtype=np.complex128)
    vec[QUBIT_A if dim == 2 else QUTRIT_A] = 1.0  # noqa: PLR2004
    return vec


def _zeno_rows(rabi: float) -> list[list[complex]]:
    s, c = math.sin(rabi), math.cos(rabi)
    return [
        [0, -1j * s, 0],
        [1j * s, 0, c],
        [0, c, 0],
    ]


def _anti_zeno_rows(rabi: float, detuning: float) -> list[list[complex]]:
    nu = math.hypot(detuning, rabi)
    # sin(nu)/nu, finite at nu = 0
    sinc = float(np.sinc(nu / math.pi))
    phase = cmath.exp(1j * detuning)
    cos_nu = math.cos(nu)
    return [
        [0, 1j * rabi * sinc / phase, 0],
        [-1j * rabi * sinc * phase, 0, phase * (cos_nu - 1j * detuning * sinc)],
        [0, (cos_nu + 1j * detuning * sinc) / phase, 0],
    ]


def control_matrix(p: ModelParams) -> SmallMatrix:
    """
    Hermitian generator M of one collision, the step being exp(-/+ i omega tau M).

    Base returns sigma-x on (a, b).
    """

    match p.kind:
        case ModelKind.BASE:
            rows: list[list[complex]] = [[0, 1], [1, 0]]
        case ModelKind.ZENO:
            rows = _zeno_rows(p.rabi)
        case ModelKind.ANTI_ZENO:
            rows = _anti_zeno_rows(p.rabi, p.detuning)
    return SmallMatrix.from_rows(rows, hermitian=True)


def collision_blocks(p: ModelParams) -> tuple[SmallMatrix, SmallMatrix]:
    """Ancilla unitaries for system |down> and |up>, in that order."""

    m = control_matrix(p)
    theta = p.omega_tau
    if p.kind == ModelKind.BASE:
        # exp(+i omega tau sigma_x) yields cos|a> + i sin|b>
        return unitary_exp(m, -theta), unitary_exp(m, theta)
    return unitary_exp(m, theta), unitary_exp(m, -theta)


@dataclass(frozen=True, eq=False)
class BranchPair:
    """Conditional ancilla states after one collision and their overlap."""

    plus: ComplexVector
    minus: ComplexVector
    kappa: complex

    def __post_init__(self) -> None:
        """Check unit norms and the overlap bound."""

        tolerance = get_tolerances().unit_norm
        for name in ("plus", "minus"):
            norm = float(np.linalg.norm(getattr(self, name)))
            if abs(norm - 1.0) > tolerance:
                raise OutOfRangeError(ERROR_BRANCH_NORM.format(name=name, norm=norm))
        if abs(self.kappa) > 1.0 + tolerance:
            raise OutOfRangeError(ERROR_KAPPA_BOUND.format(value=abs(self.kappa)))

    @property
    def kappa_mod(self) -> float:
        """|kappa|, clipped to 1."""

        return min(abs(self.kappa), 1.0)


def branch_pair(p: ModelParams) -> BranchPair:
    """Apply both collision blocks to |a>."""

    down, up = collision_blocks(p)
    start = ket_a(down.dim)
    plus = down.apply(start)
    minus = up.apply(start)
    return BranchPair(plus=plus, minus=minus, kappa=complex(np.vdot(minus, plus)))


def kappa_closed_form(p: ModelParams) -> float:
    """
    Closed-form decoherence factor.

    Base returns |cos(2 omega tau)|, Zeno and anti-Zeno the signed expressions.
    Anti-Zeno with rabi = detuning = 0 returns the signed cos(2 omega tau).
    """

    cos2 = math.cos(2 * p.omega_tau)
    match p.kind:
        case ModelKind.BASE:
            return abs(cos2)
        case ModelKind.ZENO:
            return cos2 * math.cos(p.rabi) ** 2 + math.sin(p.rabi) ** 2
        case ModelKind.ANTI_ZENO:
            eps, rabi = p.detuning, p.rabi
            nu_sq = eps**2 + rabi**2
            if nu_sq == 0.0:
                return cos2
            nu = math.sqrt(nu_sq)
            sin_sq = math.sin(nu) ** 2
            return (
                rabi**2 * sin_sq + cos2 * (nu_sq * math.cos(nu) ** 2 + eps**2 * sin_sq)
            ) / nu_sq


def dephasing_rate(p: ModelParams) -> float:
    """Continuum dephasing rate gamma."""

    match p.kind:
        case ModelKind.BASE:
            return p.omega**2 * p.tau
        case ModelKind.ZENO:
            return p.omega**2 * p.tau * math.cos(p.rabi) ** 2
        case _:
            raise UnsupportedModelError(ERROR_NO_RATE.format(kind=p.kind))


def zeno_eigenvectors(rabi: float) -> Spectrum:
    """Closed-form eigen-system of the Zeno generator, eigenvalues -1, 0, +1."""

    if not 0.0 <= rabi <= math.pi / 2:
        raise OutOfRangeError(ERROR_RABI_RANGE.format(value=rabi))

    s, c = math.sin(rabi), math.cos(rabi)
    root = math.sqrt(0.5)
    minus = [-1j * s * root, -root, c * root]
    zero = [1j * c, 0.0, s]
    plus = [-1j * s * root, root, c * root]
    return Spectrum(
        eigenvalues=np.array([-1.0, 0.0, 1.0]),
        eigenvectors=np.array([minus, zero, plus], dtype=np.complex128).T,
    )


def _check_kappa_mod(kappa_mod: float) -> None:
    if not 0.0 <= kappa_mod <= 1.0:
        raise OutOfRangeError(ERROR_KAPPA_RANGE.format(value=kappa_mod))


def decay_constant(kappa_mod: float) -> float:
    """Per-collision coherence decay Gamma = -ln kappa."""

    _check_kappa_mod(kappa_mod)
    if kappa_mod == 0.0:
        return math.inf
    if kappa_mod == 1.0:
        return 0.0
    return -math.log(kappa_mod)


def decoherence_collisions(kappa_mod: float) -> float:
    """Collisions needed for coherence to fall by 1/e."""

    gamma = decay_constant(kappa_mod)
    if gamma == 0.0:
        return math.inf
    return 1.0 / gamma


def ancilla_survival(p: ModelParams) -> float:
    """Probability an ancilla is still in |a> after one collision."""

    pair = branch_pair(p)
    index = QUBIT_A if pair.plus.shape[0] == 2 else QUTRIT_A  # noqa: PLR2004
    return float(abs(pair.plus[index]) ** 2)
