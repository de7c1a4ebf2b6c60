"""Entropy utilities (bits)."""

from __future__ import annotations

import math
from typing import TYPE_CHECKING

import numpy as np
from scipy.special import entr

from zeno_darwin.exceptions import NotNormalizedError, OutOfRangeError
from zeno_darwin.numerics.tolerances import get_tolerances

if TYPE_CHECKING:
    import numpy.typing as npt

LN2 = math.log(2.0)
ERROR_NEGATIVE = "Probability {value!r} is negative beyond clamp tolerance"
ERROR_NON_FINITE = "Probabilities must be finite, got {value!r}"


def clamp_probabilities(probs: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Clamp round-off negatives to zero, rejecting real negatives."""

    arr = np.asarray(probs, dtype=np.float64)
    if not np.all(np.isfinite(arr)):
        raise OutOfRangeError(ERROR_NON_FINITE.format(value=arr.tolist()))

    clamp = get_tolerances().probability_clamp
    if arr.size and float(arr.min()) < -clamp:
        raise OutOfRangeError(ERROR_NEGATIVE.format(value=float(arr.min())))
    return np.where(arr < 0.0, 0.0, arr)


def shannon_entropy_bits(probs: npt.ArrayLike) -> float:
    """Shannon entropy in bits, with 0 log 0 = 0."""

    arr = clamp_probabilities(probs)
    total = float(arr.sum())
    if abs(total - 1.0) > get_tolerances().normalization:
        raise NotNormalizedError(total)

    return float(entr(arr).sum() / LN2)


def binary_entropy_bits(
    upper: npt.NDArray[np.float64], lower: npt.NDArray[np.float64]
) -> npt.NDArray[np.float64]:
    """
    Elementwise entropy of two-outcome distributions (upper, lower).

    Used for the closed-form spectra of rank-2 states, where computing the
    small eigenvalue separately avoids cancellation.
    """

    return np.asarray((entr(upper) + entr(lower)) / LN2, dtype=np.float64)


def von_neumann_entropy_bits(rho: npt.ArrayLike) -> float:
    """Entropy of a density matrix from its Hermitian spectrum."""

    mat = np.asarray(rho, dtype=np.complex128)
    eigenvalues = np.linalg.eigvalsh((mat + mat.conj().T) / 2)
    return shannon_entropy_bits(eigenvalues)
