"""Collision-model physics and its exact witnesses."""

from zeno_darwin.darwinism.calculus import (
    DarwinProfile,
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
from zeno_darwin.darwinism.lindblad import (
    QubitDensity,
    continuum_consistency,
    dephasing_generator,
    evolve_dephasing,
    integrate_dephasing,
)
from zeno_darwin.darwinism.models import (
    BranchPair,
    ancilla_survival,
    branch_pair,
    collision_blocks,
    control_matrix,
    decay_constant,
    decoherence_collisions,
    dephasing_rate,
    kappa_closed_form,
    ket_a,
    zeno_eigenvectors,
)
from zeno_darwin.darwinism.oracle import (
    JointState,
    ReducedState,
    branch_state,
    compare_with_calculus,
    evolve,
    exact_entropies,
    exact_mutual_information,
    initial_state,
    reduce,
    subset_entropy,
)

__all__ = [
    "BranchPair",
    "DarwinProfile",
    "JointState",
    "QubitDensity",
    "ReducedState",
    "ancilla_survival",
    "branch_pair",
    "branch_state",
    "coherence_decay",
    "collision_blocks",
    "compare_with_calculus",
    "continuum_consistency",
    "control_matrix",
    "darwin_profile",
    "decay_constant",
    "decoherence_collisions",
    "dephasing_generator",
    "dephasing_rate",
    "entropy_curve",
    "evolve",
    "evolve_dephasing",
    "exact_entropies",
    "exact_mutual_information",
    "fragment_entropy",
    "fragment_size_for_deficit",
    "initial_state",
    "integrate_dephasing",
    "joint_fragment_entropy",
    "kappa_closed_form",
    "ket_a",
    "mutual_information",
    "mutual_information_curve",
    "redundancy",
    "redundancy_estimate",
    "reduce",
    "subset_entropy",
    "system_density",
    "system_entropy",
    "zeno_eigenvectors",
]
