"""
Analytic two-branch calculus.

After l collisions the system coherence is scaled by kappa^l, so every entropy
of the system, a fragment of m ancillas, or both, is the system entropy at some
collision count. All functions take the decoherence factor modulus.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Literal

import numpy as np

from zeno_darwin.darwinism.models import kappa_closed_form
from zeno_darwin.data import NO_DECOHERENCE, FragmentSize, SystemAmplitudes
from zeno_darwin.exceptions import OutOfRangeError
from zeno_darwin.numerics import binary_entropy_bits, get_tolerances

if TYPE_CHECKING:
    import numpy.typing as npt

    from zeno_darwin.data import ModelParams

    RealArray = npt.NDArray[np.float64]

_LOGGER = logging.getLogger(__name__)

SearchMethod = Literal["scan", "bisect"]

ERROR_KAPPA = "kappa modulus must lie in [0, 1], got {value!r}"
ERROR_COUNT = "{name} must be an integer >= {minimum}, got {value!r}"
ERROR_DELTA = "delta must lie in (0, 1), got {value!r}"
ERROR_ELL_ABOVE_N = "ell ({ell}) must not exceed the number of ancillas ({n})"
ERROR_METHOD = "Unknown search method {value!r}"


def _check_kappa(kappa_mod: float) -> float:
    if not 0.0 <= kappa_mod <= 1.0:
        raise OutOfRangeError(ERROR_KAPPA.format(value=kappa_mod))
    return float(kappa_mod)


def _check_count(value: int, name: str, minimum: int = 0) -> int:
    if (
        isinstance(value, bool)
        or not isinstance(value, int | np.integer)
        or value < minimum
    ):
        msg = ERROR_COUNT.format(name=name, minimum=minimum, value=value)
        raise OutOfRangeError(msg)
    return int(value)


def _check_delta(delta: float) -> float:
    if not 0.0 < delta < 1.0:
        raise OutOfRangeError(ERROR_DELTA.format(value=delta))
    return float(delta)


def _entropies(
    kappa_mod: float, ells: npt.NDArray[np.int64], amps: SystemAmplitudes
) -> RealArray:
    """System entropy in bits for each collision count in `ells`."""

    ell_f = ells.astype(np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        log_kappa = np.log(np.float64(kappa_mod))
        # 1 - kappa^(2l), accurate when kappa^(2l) is close to 1
        fading = np.where(ells == 0, 0.0, -np.expm1(2.0 * ell_f * log_kappa))

    det = fading * amps.weight_product
    upper = (1.0 + np.sqrt(np.maximum(1.0 - 4.0 * det, 0.0))) / 2.0
    lower = det / upper
    return binary_entropy_bits(upper, lower)


def entropy_curve(kappa_mod: float, n: int, amps: SystemAmplitudes) -> RealArray:
    """S(rho_S^l) in bits for l = 0..n."""

    kappa_mod = _check_kappa(kappa_mod)
    n = _check_count(n, "n")
    return _entropies(kappa_mod, np.arange(n + 1, dtype=np.int64), amps)


def system_entropy(kappa_mod: float, ell: int, amps: SystemAmplitudes) -> float:
    """S(rho_S^l) in bits."""

    kappa_mod = _check_kappa(kappa_mod)
    ell = _check_count(ell, "ell")
    return float(_entropies(kappa_mod, np.array([ell], dtype=np.int64), amps)[0])


def system_density(
    kappa: complex, ell: int, amps: SystemAmplitudes
) -> npt.NDArray[np.complex128]:
    """Reduced system state after l collisions in the (down, up) basis."""

    if abs(kappa) > 1.0 + get_tolerances().unit_norm:
        raise OutOfRangeError(ERROR_KAPPA.format(value=abs(kappa)))
    ell = _check_count(ell, "ell")

    alpha, beta = amps.alpha, amps.beta
    coherence = alpha * beta.conjugate() * complex(kappa) ** ell
    return np.array(
        [
            [abs(alpha) ** 2, coherence],
            [coherence.conjugate(), abs(beta) ** 2],
        ],
        dtype=np.complex128,
    )


def coherence_decay(kappa_mod: float, n: int, amps: SystemAmplitudes) -> RealArray:
    """|rho_S^l[down, up]| for l = 0..n."""

    kappa_mod = _check_kappa(kappa_mod)
    n = _check_count(n, "n")
    scale = abs(amps.alpha * amps.beta.conjugate())
    return np.asarray(scale * kappa_mod ** np.arange(n + 1, dtype=np.float64))


def fragment_entropy(
    kappa_mod: float, ell: int, m: int, amps: SystemAmplitudes
) -> float:
    """S(rho_F_m) in bits, the first m ancillas after l collisions."""

    ell = _check_count(ell, "ell")
    m = _check_count(m, "m")
    return system_entropy(kappa_mod, min(ell, m), amps)


def joint_fragment_entropy(
    kappa_mod: float, ell: int, m: int, amps: SystemAmplitudes
) -> float:
    """S(rho_SF_m) in bits; the joint state is pure once m >= l."""

    ell = _check_count(ell, "ell")
    m = _check_count(m, "m")
    if m >= ell:
        return 0.0
    return system_entropy(kappa_mod, ell - m, amps)


def mutual_information_curve(
    kappa_mod: float, ell: int, n: int, amps: SystemAmplitudes
) -> RealArray:
    """I(S, F_m) in bits for m = 0..n after l collisions."""

    kappa_mod = _check_kappa(kappa_mod)
    ell = _check_count(ell, "ell")
    n = _check_count(n, "n")

    curve = _entropies(kappa_mod, np.arange(ell + 1, dtype=np.int64), amps)
    inside = np.minimum(np.arange(n + 1), ell)
    # m > l collapses to S_l + S_l - S_0, the 2 S_l plateau
    return np.asarray(curve[ell] + curve[inside] - curve[ell - inside])


def mutual_information(
    kappa_mod: float, ell: int, m: int, amps: SystemAmplitudes
) -> float:
    """I(S, F_m) in bits after l collisions."""

    ell = _check_count(ell, "ell")
    m = _check_count(m, "m")
    if m == 0:
        return 0.0
    return float(mutual_information_curve(kappa_mod, ell, m, amps)[m])


def fragment_size_for_deficit(
    kappa_mod: float,
    ell: int,
    delta: float,
    amps: SystemAmplitudes,
    *,
    method: SearchMethod = "scan",
) -> FragmentSize:
    """
    Smallest fragment carrying (1 - delta) of the system entropy.

    Returns `NO_DECOHERENCE` when the system entropy is below the minimum
    entropy tolerance, since every fragment then satisfies the condition.
    """

    kappa_mod = _check_kappa(kappa_mod)
    ell = _check_count(ell, "ell")
    delta = _check_delta(delta)

    info = mutual_information_curve(kappa_mod, ell, ell, amps)
    entropy = float(info[ell]) / 2.0
    if entropy < get_tolerances().min_entropy:
        return NO_DECOHERENCE

    threshold = (1.0 - delta) * entropy
    match method:
        case "scan":
            return int(np.argmax(info >= threshold))
        case "bisect":
            return int(np.searchsorted(info, threshold, side="left"))
        case _:
            raise OutOfRangeError(ERROR_METHOD.format(value=method))


def redundancy(
    kappa_mod: float, n: int, delta: float, amps: SystemAmplitudes
) -> float:
    """R = n / m_delta, 0 when the system never decohered."""

    n = _check_count(n, "n", minimum=1)
    m_delta = fragment_size_for_deficit(kappa_mod, n, delta, amps)
    if m_delta is NO_DECOHERENCE:
        return 0.0
    return n / m_delta


def redundancy_estimate(kappa_mod: float, n: int) -> float:
    """Scaling-law estimate R ~ -n ln kappa, infinite at kappa = 0."""

    n = _check_count(n, "n", minimum=1)
    if not 0.0 <= kappa_mod <= 1.0:
        raise OutOfRangeError(ERROR_KAPPA.format(value=kappa_mod))
    if kappa_mod == 0.0:
        return float("inf")
    if kappa_mod == 1.0:
        return 0.0
    return -n * float(np.log(kappa_mod))


@dataclass(frozen=True, eq=False)
class DarwinProfile:
    """Mutual information profile over fragment sizes at fixed l."""

    n_collisions: int
    n_ancillas: int
    kappa: float
    delta: float
    system_entropy_bits: float
    # indexed by fragment size m = 0..n_ancillas
    mutual_info_bits: RealArray
    m_delta: FragmentSize
    redundancy: float

    @property
    def decohered(self) -> bool:
        """Whether the system lost any coherence."""

        return self.m_delta is not NO_DECOHERENCE

    @property
    def redundancy_estimate(self) -> float:
        """-l ln |kappa|."""

        if self.n_collisions == 0:
            return 0.0
        return redundancy_estimate(min(abs(self.kappa), 1.0), self.n_collisions)


def darwin_profile(
    p: ModelParams,
    n: int,
    delta: float,
    amps: SystemAmplitudes | None = None,
    *,
    ell: int | None = None,
) -> DarwinProfile:
    """Assemble the profile of `n` ancillas after `ell` (default `n`) collisions."""

    amps = amps or SystemAmplitudes.uniform()
    n = _check_count(n, "n", minimum=1)
    delta = _check_delta(delta)
    ell = n if ell is None else _check_count(ell, "ell")
    if ell > n:
        raise OutOfRangeError(ERROR_ELL_ABOVE_N.format(ell=ell, n=n))

    kappa = kappa_closed_form(p)
    kappa_mod = min(abs(kappa), 1.0)
    info = mutual_information_curve(kappa_mod, ell, n, amps)
    info.setflags(write=False)

    m_delta = fragment_size_for_deficit(kappa_mod, ell, delta, amps)
    ratio = 0.0 if m_delta is NO_DECOHERENCE else ell / m_delta
    _LOGGER.debug(
        "Profile %s: kappa=%r ell=%d m_delta=%s R=%r",
        p.kind,
        kappa,
        ell,
        m_delta,
        ratio,
    )
    return DarwinProfile(
        n_collisions=ell,
        n_ancillas=n,
        kappa=kappa,
        delta=delta,
        system_entropy_bits=system_entropy(kappa_mod, ell, amps),
        mutual_info_bits=info,
        m_delta=m_delta,
        redundancy=ratio,
    )
