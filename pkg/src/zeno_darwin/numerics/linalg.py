"""Exact-size complex linear algebra for 2x2 and 3x3 operators."""

from __future__ import annotations

import cmath
import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np

from zeno_darwin.exceptions import NonHermitianError, OutOfRangeError
from zeno_darwin.numerics.tolerances import get_tolerances

if TYPE_CHECKING:
    from collections.abc import Sequence

    import numpy.typing as npt

    ComplexArray = npt.NDArray[np.complex128]
    RealArray = npt.NDArray[np.float64]

_LOGGER = logging.getLogger(__name__)
SMALL_DIMS = (2, 3)

ERROR_DIM = "Matrix must be square with dimension in {dims}, got shape {shape}"
ERROR_NOT_FINITE = "{name} must be finite, got {value!r}"


def ensure_finite(value: complex, name: str = "value") -> complex:
    """Reject NaN and infinite scalars."""

    if not cmath.isfinite(value):
        raise OutOfRangeError(ERROR_NOT_FINITE.format(name=name, value=value))
    return value


def _frozen(array: npt.ArrayLike, dtype: type) -> npt.NDArray[Any]:
    out = np.array(array, dtype=dtype, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class SmallMatrix:
    """Immutable 2x2 or 3x3 complex matrix."""

    entries: ComplexArray
    hermitian: bool = False
    dim: int = field(init=False)

    def __post_init__(self) -> None:
        """Validate and freeze entries."""

        entries = _frozen(self.entries, np.complex128)
        if (
            entries.ndim != 2  # noqa: PLR2004
            or entries.shape[0] != entries.shape[1]
            or entries.shape[0] not in SMALL_DIMS
        ):
            msg = ERROR_DIM.format(dims=SMALL_DIMS, shape=entries.shape)
            raise OutOfRangeError(msg)
        if not np.all(np.isfinite(entries)):
            raise OutOfRangeError(
                ERROR_NOT_FINITE.format(name="matrix entries", value=entries)
            )

        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "dim", int(entries.shape[0]))
        if self.hermitian:
            check_hermitian(entries)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[complex]], *, hermitian: bool = False
    ) -> SmallMatrix:
        """Build from row-major nested sequences."""

        return cls(np.asarray(rows, dtype=np.complex128), hermitian=hermitian)

    @property
    def adjoint(self) -> SmallMatrix:
        """Conjugate transpose."""

        return SmallMatrix(self.entries.conj().T, hermitian=self.hermitian)

    def __matmul__(self, other: SmallMatrix) -> SmallMatrix:
        """Matrix product."""

        return SmallMatrix(self.entries @ other.entries)

    def apply(self, vector: npt.ArrayLike) -> ComplexArray:
        """Apply matrix to a vector."""

        return np.asarray(self.entries @ np.asarray(vector, dtype=np.complex128))


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigen-decomposition of a Hermitian matrix, eigenvalues ascending."""

    eigenvalues: RealArray
    # eigenvectors are the columns
    eigenvectors: ComplexArray

    def __post_init__(self) -> None:
        """Freeze arrays."""

        object.__setattr__(self, "eigenvalues", _frozen(self.eigenvalues, np.float64))
        object.__setattr__(
            self, "eigenvectors", _frozen(self.eigenvectors, np.complex128)
        )

    def vector(self, index: int) -> ComplexArray:
        """Get unit eigenvector for eigenvalue `index`."""

        return np.asarray(self.eigenvectors[:, index])

    def reconstruct(self) -> ComplexArray:
        """Sum of lambda_i v_i v_i^dagger."""

        vecs = self.eigenvectors
        return np.asarray((vecs * self.eigenvalues) @ vecs.conj().T)

    def orthonormality_error(self) -> float:
        """Max deviation of V^dagger V from identity."""

        vecs = self.eigenvectors
        gram = vecs.conj().T @ vecs
        return float(np.max(np.abs(gram - np.eye(vecs.shape[1]))))


def hermitian_asymmetry(entries: npt.ArrayLike) -> float:
    """Max |m_ij - conj(m_ji)|."""

    arr = np.asarray(entries, dtype=np.complex128)
    return float(np.max(np.abs(arr - arr.conj().T)))


def check_hermitian(entries: npt.ArrayLike) -> None:
    """Raise `NonHermitianError` if matrix is not Hermitian within tolerance."""

    asymmetry = hermitian_asymmetry(entries)
    if asymmetry > get_tolerances().hermitian:
        raise NonHermitianError(asymmetry)


def hermitian_eigen(m: SmallMatrix) -> Spectrum:
    """Diagonalize a Hermitian 2x2 or 3x3 matrix."""

    check_hermitian(m.entries)
    # symmetrize so rounding noise below tolerance cannot leak into eigh
    sym = (m.entries + m.entries.conj().T) / 2
    eigenvalues, eigenvectors = np.linalg.eigh(sym)
    return Spectrum(eigenvalues=eigenvalues, eigenvectors=eigenvectors)


def unitary_exp(m: SmallMatrix, angle: float) -> SmallMatrix:
    """Return exp(-i * angle * m) for Hermitian `m`."""

    ensure_finite(angle, "angle")
    spectrum = hermitian_eigen(m)
    phases = np.exp(-1j * float(angle) * spectrum.eigenvalues)
    vecs = spectrum.eigenvectors
    return SmallMatrix((vecs * phases) @ vecs.conj().T)


def unitarity_error(u: SmallMatrix) -> float:
    """Max deviation of U^dagger U from identity."""

    gram = u.entries.conj().T @ u.entries
    return float(np.max(np.abs(gram - np.eye(u.dim))))
