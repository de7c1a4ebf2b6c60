"""Test the analytic two-branch calculus."""

from __future__ import annotations

import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zeno_darwin.darwinism import (
    coherence_decay,
    darwin_profile,
    entropy_curve,
    fragment_entropy,
    fragment_size_for_deficit,
    joint_fragment_entropy,
    mutual_information,
    mutual_information_curve,
    redundancy,
    redundancy_estimate,
    system_density,
    system_entropy,
)
from zeno_darwin.data import NO_DECOHERENCE, ModelKind, ModelParams, SystemAmplitudes
from zeno_darwin.exceptions import OutOfRangeError

KAPPA = math.cos(0.5)
N = 1000

amplitudes = st.floats(min_value=0.05, max_value=0.95).map(
    lambda p: SystemAmplitudes(alpha=math.sqrt(p), beta=math.sqrt(1.0 - p))
)


def _entropy_mp(kappa: float, ell: int) -> mpmath.mpf:
    with mpmath.workdps(50):
        p = (1 + mpmath.mpf(kappa) ** ell) / 2
        q = 1 - p
        return -(p * mpmath.log(p, 2) + q * mpmath.log(q, 2))


def test_system_entropy_uniform(amps: SystemAmplitudes) -> None:
    """Test S(l) = h((1 + kappa^l) / 2) for equal amplitudes."""

    for ell in (0, 1, 5, 50):
        expected = float(_entropy_mp(KAPPA, ell)) if ell else 0.0
        assert system_entropy(KAPPA, ell, amps) == pytest.approx(expected, abs=1e-14)


def test_mutual_information_high_precision(amps: SystemAmplitudes) -> None:
    """Test I(S, F_5) after 1000 collisions against 50 digit arithmetic."""

    expected = _entropy_mp(KAPPA, N) + _entropy_mp(KAPPA, 5) - _entropy_mp(KAPPA, 995)

    assert mutual_information(KAPPA, N, 5, amps) == pytest.approx(
        float(expected), abs=1e-12
    )


def test_system_entropy_no_cancellation(amps: SystemAmplitudes) -> None:
    """Test entropy stays accurate when kappa is within 1e-12 of 1."""

    kappa = 1.0 - 1e-12
    expected = float(_entropy_mp(kappa, 3))

    assert expected > 0
    assert system_entropy(kappa, 3, amps) == pytest.approx(expected, rel=1e-5)


def test_entropy_curve(amps: SystemAmplitudes) -> None:
    """Test the vectorised curve equals scalar calls."""

    curve = entropy_curve(KAPPA, 40, amps)

    assert curve.shape == (41,)
    for ell, value in enumerate(curve):
        assert value == pytest.approx(system_entropy(KAPPA, ell, amps), abs=1e-15)
    assert np.all(np.diff(curve) >= -1e-15)


def test_entropy_extremes(amps: SystemAmplitudes) -> None:
    """Test entropy for kappa 0 and 1."""

    assert entropy_curve(1.0, 10, amps).tolist() == [0.0] * 11
    assert entropy_curve(0.0, 3, amps).tolist() == pytest.approx([0, 1, 1, 1])


def test_system_density() -> None:
    """Test the reduced system state keeps populations and scales coherence."""

    amps = SystemAmplitudes(alpha=0.6, beta=0.8j)
    rho = system_density(-0.5, 3, amps)

    assert rho[0, 0] == pytest.approx(0.36)
    assert rho[1, 1] == pytest.approx(0.64)
    assert rho[0, 1] == pytest.approx(0.6 * -0.8j * -0.125)
    assert rho[1, 0] == pytest.approx(np.conj(rho[0, 1]))

    with pytest.raises(OutOfRangeError):
        system_density(1.5, 1, amps)


def test_coherence_decay(amps: SystemAmplitudes) -> None:
    """Test |rho_S[down, up]| = |alpha beta| kappa^l."""

    decay = coherence_decay(0.5, 3, amps)

    assert decay.tolist() == pytest.approx([0.5, 0.25, 0.125, 0.0625])


def test_fragment_entropies(amps: SystemAmplitudes) -> None:
    """Test fragment and joint entropies map onto system entropies."""

    assert fragment_entropy(KAPPA, 10, 4, amps) == system_entropy(KAPPA, 4, amps)
    assert fragment_entropy(KAPPA, 3, 8, amps) == system_entropy(KAPPA, 3, amps)
    assert joint_fragment_entropy(KAPPA, 10, 4, amps) == system_entropy(KAPPA, 6, amps)
    assert joint_fragment_entropy(KAPPA, 3, 3, amps) == 0.0
    assert joint_fragment_entropy(KAPPA, 3, 8, amps) == 0.0


@settings(deadline=None, max_examples=300)
@given(
    kappa_mod=st.floats(min_value=0.0, max_value=1.0),
    ell=st.integers(min_value=0, max_value=300),
    data=st.data(),
    amps=amplitudes,
)
def test_complementarity(
    kappa_mod: float, ell: int, data: st.DataObject, amps: SystemAmplitudes
) -> None:
    """Test I(S, F_m) + I(S, F_(l - m)) = 2 S(rho_S)."""

    m = data.draw(st.integers(min_value=0, max_value=ell))
    total = mutual_information(kappa_mod, ell, m, amps) + mutual_information(
        kappa_mod, ell, ell - m, amps
    )

    assert total == pytest.approx(2 * system_entropy(kappa_mod, ell, amps), abs=1e-10)


def test_complementarity_many(rng: np.random.Generator) -> None:
    """Test complementarity on ten thousand random (kappa, l, m) triples."""

    amps = SystemAmplitudes.uniform()
    for _ in range(10_000):
        kappa_mod = float(rng.uniform(0.0, 1.0))
        ell = int(rng.integers(0, 301))
        m = int(rng.integers(0, ell + 1))

        total = mutual_information(kappa_mod, ell, m, amps) + mutual_information(
            kappa_mod, ell, ell - m, amps
        )
        expected = 2 * system_entropy(kappa_mod, ell, amps)
        assert total == pytest.approx(expected, abs=1e-10)


@settings(deadline=None, max_examples=100)
@given(
    kappa_mod=st.floats(min_value=0.0, max_value=1.0),
    ell=st.integers(min_value=0, max_value=200),
    amps=amplitudes,
)
def test_mutual_information_curve(
    kappa_mod: float, ell: int, amps: SystemAmplitudes
) -> None:
    """Test I(S, F_m) is monotone in m and plateaus at 2 S beyond l."""

    n = ell + 10
    curve = mutual_information_curve(kappa_mod, ell, n, amps)
    entropy = system_entropy(kappa_mod, ell, amps)

    assert curve[0] == 0.0
    assert np.all(np.diff(curve) >= -1e-12)
    plateau = [2 * entropy] * (n - ell + 1)
    assert curve[ell:].tolist() == pytest.approx(plateau, abs=1e-12)
    for m in (1, ell // 2, n):
        assert mutual_information(kappa_mod, ell, m, amps) == curve[m]


def test_fragment_size_for_deficit(amps: SystemAmplitudes) -> None:
    """Test m_delta at omega tau = 0.25 after 1000 collisions."""

    assert fragment_size_for_deficit(KAPPA, N, 0.1, amps) == 8  # noqa: PLR2004
    assert redundancy(KAPPA, N, 0.1, amps) == 125  # noqa: PLR2004
    assert redundancy_estimate(KAPPA, N) == pytest.approx(130.6, abs=0.05)


@pytest.mark.parametrize("kappa_mod", np.linspace(0.0, 0.999, 37).tolist())
@pytest.mark.parametrize("delta", [0.05, 0.1, 0.3])
def test_fragment_size_methods_agree(
    kappa_mod: float, delta: float, amps: SystemAmplitudes
) -> None:
    """Test linear scan and bisection find the same fragment size."""

    scan = fragment_size_for_deficit(kappa_mod, 200, delta, amps, method="scan")
    bisect = fragment_size_for_deficit(kappa_mod, 200, delta, amps, method="bisect")

    assert scan == bisect


def test_fragment_size_no_decoherence(amps: SystemAmplitudes) -> None:
    """Test an undecohered system yields the sentinel and zero redundancy."""

    assert fragment_size_for_deficit(1.0, N, 0.1, amps) is NO_DECOHERENCE
    assert fragment_size_for_deficit(0.5, 0, 0.1, amps) is NO_DECOHERENCE
    assert redundancy(1.0, N, 0.1, amps) == 0.0
    assert redundancy_estimate(1.0, N) == 0.0


def test_fragment_size_full_dephasing(amps: SystemAmplitudes) -> None:
    """Test a single ancilla suffices when kappa is 0."""

    assert fragment_size_for_deficit(0.0, N, 0.1, amps) == 1
    assert redundancy(0.0, N, 0.1, amps) == N
    assert redundancy_estimate(0.0, N) == math.inf


@pytest.mark.parametrize(
    ("args", "kwargs"),
    [
        ((1.5, 10, 0.1), {}),
        ((-0.1, 10, 0.1), {}),
        ((0.5, -1, 0.1), {}),
        ((0.5, True, 0.1), {}),
        ((0.5, 10, 0.0), {}),
        ((0.5, 10, 1.0), {}),
        ((0.5, 10, 0.1), {"method": "newton"}),
    ],
)
def test_fragment_size_invalid(
    args: tuple[float, int, float], kwargs: dict[str, str], amps: SystemAmplitudes
) -> None:
    """Test argument validation."""

    with pytest.raises(OutOfRangeError):
        fragment_size_for_deficit(*args, amps, **kwargs)  # type: ignore[arg-type]


def test_redundancy_invalid() -> None:
    """Test redundancy needs at least one ancilla."""

    with pytest.raises(OutOfRangeError):
        redundancy_estimate(0.5, 0)
    with pytest.raises(OutOfRangeError):
        redundancy_estimate(1.5, 10)


def test_darwin_profile(base_params: ModelParams, amps: SystemAmplitudes) -> None:
    """Test the profile of the base model after 1000 collisions."""

    profile = darwin_profile(base_params, N, 0.1, amps)

    assert profile.n_collisions == N
    assert profile.n_ancillas == N
    assert profile.kappa == pytest.approx(KAPPA)
    assert profile.m_delta == 8  # noqa: PLR2004
    assert profile.redundancy == 125  # noqa: PLR2004
    assert profile.redundancy_estimate == pytest.approx(130.6, abs=0.05)
    assert profile.decohered is True
    assert profile.system_entropy_bits == pytest.approx(1.0)
    assert profile.mutual_info_bits.shape == (N + 1,)
    assert profile.mutual_info_bits[-1] == pytest.approx(2.0)


def test_darwin_profile_partial(base_params: ModelParams) -> None:
    """Test a profile before every ancilla collided."""

    profile = darwin_profile(base_params, 20, 0.1, ell=10)

    assert profile.n_collisions == 10  # noqa: PLR2004
    assert profile.n_ancillas == 20  # noqa: PLR2004
    assert profile.mutual_info_bits[10:].tolist() == pytest.approx(
        [2 * profile.system_entropy_bits] * 11
    )

    with pytest.raises(OutOfRangeError):
        darwin_profile(base_params, 20, 0.1, ell=21)


def test_darwin_profile_frozen() -> None:
    """Test the frozen Zeno limit has no redundancy."""

    p = ModelParams(kind=ModelKind.ZENO, omega=5.0, tau=0.05, rabi=math.pi / 2)
    profile = darwin_profile(p, N, 0.1)

    assert profile.kappa == 1.0
    assert profile.m_delta is NO_DECOHERENCE
    assert profile.decohered is False
    assert profile.redundancy == 0.0
    assert profile.redundancy_estimate == 0.0
    assert not profile.mutual_info_bits.any()
