"""
Brute-force state vector simulator for small environments.

Joint states are stored as tensors of shape (2, d, ..., d): axis 0 is the system
qubit (down first), axis 1 + j is ancilla j.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import reduce as fold
from typing import TYPE_CHECKING

import numpy as np

from zeno_darwin.darwinism.calculus import (
    fragment_entropy,
    joint_fragment_entropy,
    mutual_information,
    system_entropy,
)
from zeno_darwin.darwinism.models import (
    branch_pair,
    collision_blocks,
    kappa_closed_form,
    ket_a,
)
from zeno_darwin.data import SystemAmplitudes
from zeno_darwin.exceptions import BadSubsetError, OutOfRangeError, TooLargeError
from zeno_darwin.numerics import (
    check_hermitian,
    get_tolerances,
    von_neumann_entropy_bits,
)

if TYPE_CHECKING:
    from collections.abc import Sequence

    import numpy.typing as npt

    from zeno_darwin.data import ModelParams

    ComplexArray = npt.NDArray[np.complex128]

_LOGGER = logging.getLogger(__name__)

MAX_ANCILLAS = {2: 12, 3: 8}
# largest reduced state materialized as a dense matrix
MAX_REDUCED_DIM = 1024

ERROR_TOO_LARGE = "{n} ancillas of dimension {dim} exceed the cap of {cap}"
ERROR_BAD_DIM = "Ancilla dimension must be 2 or 3, got {dim}"
ERROR_ELL = "ell ({ell}) must lie in [0, {n}]"
ERROR_FRAGMENT = "m ({m}) must lie in [0, {n}]"
ERROR_NORM = "Joint state norm drifted to {norm!r}"
ERROR_SUBSET_EMPTY = "Subset keeps nothing"
ERROR_SUBSET_INDEX = "Ancilla index {index} is outside [0, {n})"
ERROR_SUBSET_REPEAT = "Ancilla index {index} is repeated"
ERROR_REDUCED_DIM = "Reduced state of dimension {dim} exceeds the cap of {cap}"
ERROR_TRACE = "Reduced state trace is {trace!r}, expected 1"
ERROR_POSITIVE = "Reduced state has eigenvalue {value!r} below zero"


def _check_size(n: int, dim: int) -> None:
    cap = MAX_ANCILLAS.get(dim)
    if cap is None:
        raise TooLargeError(ERROR_BAD_DIM.format(dim=dim))
    if n < 0 or n > cap:
        raise TooLargeError(ERROR_TOO_LARGE.format(n=n, dim=dim, cap=cap))


@dataclass(frozen=True, eq=False)
class JointState:
    """Pure system and environment state."""

    tensor: ComplexArray
    n_ancillas: int = field(init=False)
    ancilla_dim: int = field(init=False)

    def __post_init__(self) -> None:
        """Validate shape, size cap and norm."""

        tensor = np.array(self.tensor, dtype=np.complex128, copy=True)
        dim = tensor.shape[1] if tensor.ndim > 1 else 2
        n = tensor.ndim - 1
        _check_size(n, dim)
        norm = float(np.linalg.norm(tensor))
        if abs(norm - 1.0) > get_tolerances().unit_norm:
            raise OutOfRangeError(ERROR_NORM.format(norm=norm))

        tensor.setflags(write=False)
        object.__setattr__(self, "tensor", tensor)
        object.__setattr__(self, "n_ancillas", n)
        object.__setattr__(self, "ancilla_dim", dim)

    @property
    def amplitudes(self) -> ComplexArray:
        """Flat amplitudes, system index slowest."""

        return self.tensor.reshape(-1)

    @property
    def norm(self) -> float:
        """Euclidean norm."""

        return float(np.linalg.norm(self.tensor))

    def split(
        self, *, system: bool, ancillas: Sequence[int]
    ) -> tuple[ComplexArray, int]:
        """Reshape into a (kept, traced) matrix for the given subset."""

        keep = _keep_axes(self.n_ancillas, system=system, ancillas=ancillas)
        moved = np.moveaxis(self.tensor, keep, list(range(len(keep))))
        kept_dim = int(np.prod([self.tensor.shape[a] for a in keep], dtype=np.int64))
        return moved.reshape(kept_dim, -1), kept_dim


@dataclass(frozen=True, eq=False)
class ReducedState:
    """Density matrix of a subsystem."""

    matrix: ComplexArray
    dim: int = field(init=False)

    def __post_init__(self) -> None:
        """Check Hermiticity, unit trace and positivity."""

        matrix = np.array(self.matrix, dtype=np.complex128, copy=True)
        tolerances = get_tolerances()
        check_hermitian(matrix)
        trace = complex(np.trace(matrix))
        if abs(trace - 1.0) > tolerances.trace:
            raise OutOfRangeError(ERROR_TRACE.format(trace=trace))
        smallest = float(np.linalg.eigvalsh((matrix + matrix.conj().T) / 2)[0])
        if smallest < -tolerances.positivity:
            raise OutOfRangeError(ERROR_POSITIVE.format(value=smallest))

        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "dim", int(matrix.shape[0]))

    def entropy(self) -> float:
        """Von Neumann entropy in bits."""

        return von_neumann_entropy_bits(self.matrix)


def _keep_axes(n: int, *, system: bool, ancillas: Sequence[int]) -> list[int]:
    seen: set[int] = set()
    for index in ancillas:
        if not 0 <= index < n:
            raise BadSubsetError(ERROR_SUBSET_INDEX.format(index=index, n=n))
        if index in seen:
            raise BadSubsetError(ERROR_SUBSET_REPEAT.format(index=index))
        seen.add(index)

    keep = ([0] if system else []) + [1 + i for i in sorted(seen)]
    if not keep:
        raise BadSubsetError(ERROR_SUBSET_EMPTY)
    return keep


def initial_state(amps: SystemAmplitudes, n: int, dim: int) -> JointState:
    """(alpha |down> + beta |up>) followed by n ancillas in |a>."""

    _check_size(n, dim)
    vec = fold(np.kron, [ket_a(dim)] * n, amps.vector)
    return JointState(vec.reshape((2,) + (dim,) * n))


def _collision_gate(p: ModelParams) -> ComplexArray:
    down, up = collision_blocks(p)
    d = down.dim
    gate = np.zeros((2, d, 2, d), dtype=np.complex128)
    gate[0, :, 0, :] = down.entries
    gate[1, :, 1, :] = up.entries
    return gate


def evolve(amps: SystemAmplitudes, p: ModelParams, ell: int, n: int) -> JointState:
    """Apply the system-ancilla collision to ancillas 0..ell-1 in order."""

    dim = p.ancilla_dim
    _check_size(n, dim)
    if not 0 <= ell <= n:
        raise OutOfRangeError(ERROR_ELL.format(ell=ell, n=n))

    gate = _collision_gate(p)
    psi = initial_state(amps, n, dim).tensor
    for j in range(ell):
        psi = np.tensordot(gate, psi, axes=([2, 3], [0, 1 + j]))
        psi = np.moveaxis(psi, 1, 1 + j)
    _LOGGER.debug("Evolved %d of %d ancillas (%s)", ell, n, p.kind)
    return JointState(psi)


def branch_state(
    amps: SystemAmplitudes, p: ModelParams, ell: int, n: int
) -> JointState:
    """Joint state assembled from the two-branch form."""

    dim = p.ancilla_dim
    _check_size(n, dim)
    if not 0 <= ell <= n:
        raise OutOfRangeError(ERROR_ELL.format(ell=ell, n=n))

    pair = branch_pair(p)
    rest = [ket_a(dim)] * (n - ell)
    down = fold(np.kron, [pair.plus] * ell + rest, np.array([amps.alpha, 0.0]))
    up = fold(np.kron, [pair.minus] * ell + rest, np.array([0.0, amps.beta]))
    return JointState((down + up).reshape((2,) + (dim,) * n))


def reduce(
    state: JointState, *, system: bool, ancillas: Sequence[int] = ()
) -> ReducedState:
    """
    Partial trace onto the system (optional) and the given ancillas.

    Raises `TooLargeError` when the kept dimension exceeds `MAX_REDUCED_DIM`.
    """

    matrix, kept_dim = state.split(system=system, ancillas=ancillas)
    if kept_dim > MAX_REDUCED_DIM:
        raise TooLargeError(ERROR_REDUCED_DIM.format(dim=kept_dim, cap=MAX_REDUCED_DIM))
    return ReducedState(matrix @ matrix.conj().T)


def subset_entropy(
    state: JointState, *, system: bool, ancillas: Sequence[int] = ()
) -> float:
    """
    Entropy of a subset in bits.

    Diagonalizes the Gram matrix on whichever side of the cut is smaller; a pure
    state shares its nonzero spectrum across the cut.
    """

    if not system and not ancillas:
        return 0.0
    matrix, _ = state.split(system=system, ancillas=ancillas)
    if matrix.shape[0] <= matrix.shape[1]:
        gram = matrix @ matrix.conj().T
    else:
        gram = matrix.conj().T @ matrix
    return von_neumann_entropy_bits(gram)


def exact_entropies(state: JointState, m: int) -> tuple[float, float, float]:
    """S(S), S(F_m), S(S F_m) in bits, F_m being the first m ancillas."""

    if not 0 <= m <= state.n_ancillas:
        raise OutOfRangeError(ERROR_FRAGMENT.format(m=m, n=state.n_ancillas))

    fragment = list(range(m))
    s_system = subset_entropy(state, system=True)
    s_fragment = subset_entropy(state, system=False, ancillas=fragment)
    s_joint = subset_entropy(state, system=True, ancillas=fragment)
    return s_system, s_fragment, s_joint


def exact_mutual_information(state: JointState, m: int) -> float:
    """I(S, F_m) in bits from numerically diagonalized reduced states."""

    if m == 0:
        return 0.0
    s_system, s_fragment, s_joint = exact_entropies(state, m)
    return s_system + s_fragment - s_joint


def compare_with_calculus(
    p: ModelParams, n: int, amps: SystemAmplitudes | None = None
) -> float:
    """Max deviation between analytic and exact entropies over all l, m <= n."""

    amps = amps or SystemAmplitudes.uniform()
    kappa_mod = min(abs(kappa_closed_form(p)), 1.0)
    worst = 0.0
    for ell in range(n + 1):
        state = evolve(amps, p, ell, n)
        for m in range(n + 1):
            exact = exact_entropies(state, m)
            analytic = (
                system_entropy(kappa_mod, ell, amps),
                fragment_entropy(kappa_mod, ell, m, amps),
                joint_fragment_entropy(kappa_mod, ell, m, amps),
            )
            info_gap = abs(
                exact_mutual_information(state, m)
                - mutual_information(kappa_mod, ell, m, amps)
            )
            gaps = [abs(e - a) for e, a in zip(exact, analytic, strict=True)]
            worst = max(worst, info_gap, *gaps)

    _LOGGER.info("Oracle check %s n=%d: max deviation %.3e", p.kind, n, worst)
    return worst
