"""Small-matrix linear algebra and entropy utilities."""

from zeno_darwin.numerics.entropy import (
    binary_entropy_bits,
    clamp_probabilities,
    shannon_entropy_bits,
    von_neumann_entropy_bits,
)
from zeno_darwin.numerics.linalg import (
    SmallMatrix,
    Spectrum,
    check_hermitian,
    ensure_finite,
    hermitian_asymmetry,
    hermitian_eigen,
    unitarity_error,
    unitary_exp,
)
from zeno_darwin.numerics.tolerances import (
    Tolerances,
    get_tolerances,
    override_tolerances,
)

__all__ = [
    "SmallMatrix",
    "Spectrum",
    "Tolerances",
    "binary_entropy_bits",
    "check_hermitian",
    "clamp_probabilities",
    "ensure_finite",
    "get_tolerances",
    "hermitian_asymmetry",
    "hermitian_eigen",
    "override_tolerances",
    "shannon_entropy_bits",
    "unitarity_error",
    "unitary_exp",
    "von_neumann_entropy_bits",
]
