"""Qubit phase operators, covariant phase POVMs and the phase-dispersion
entanglement degree for one and two qubits."""

from ._qphase import (  # noqa: F401
    JointPhaseFourier,
    PhaseFourier,
    QuantumState,
    bell_states,
    bloch_state,
    bloch_vector,
    cast_basis_state,
    concurrence,
    dispersion,
    entanglement_degree,
    epsilon_family,
    hermitian_phase_distribution,
    is_maximally_entangled,
    joint_distribution,
    marginal_diff_povm,
    moments_from_distribution,
    phase_distribution,
    phase_eigenstates,
    phase_operator_function,
    povm_element,
    q_function,
    q_povm_element,
    reconstruct_from_three_points,
    run_selftest,
    schmidt_decompose,
    sum_diff_dispersions,
    sum_diff_operators,
    validate_state,
)

__all__ = [
    "JointPhaseFourier",
    "PhaseFourier",
    "QuantumState",
    "bell_states",
    "bloch_state",
    "bloch_vector",
    "cast_basis_state",
    "concurrence",
    "dispersion",
    "entanglement_degree",
    "epsilon_family",
    "hermitian_phase_distribution",
    "is_maximally_entangled",
    "joint_distribution",
    "marginal_diff_povm",
    "moments_from_distribution",
    "phase_distribution",
    "phase_eigenstates",
    "phase_operator_function",
    "povm_element",
    "q_function",
    "q_povm_element",
    "reconstruct_from_three_points",
    "run_selftest",
    "schmidt_decompose",
    "sum_diff_dispersions",
    "sum_diff_operators",
    "validate_state",
]
