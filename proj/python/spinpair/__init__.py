"""Dissipative dynamics and entanglement storage of a dipolar-coupled qubit pair."""

from ._core import (
    AngularConfig,
    BlockSystem,
    ConcurrenceResult,
    ConcurrenceRoute,
    Model,
    ObservableVector,
    PhysicalParams,
    RateSet,
    SpectralAnalysis,
    SteadyState,
    SteadyStateMode,
    Trajectory,
    assemble_liouvillian,
    build_block_system,
    build_coherent_part,
    build_dissipator_D,
    build_dissipator_Q,
    build_t2,
    compute_rates,
    concurrence_closed_form,
    concurrence_guard,
    concurrence_wootters,
    dipolar_hamiltonian,
    dipolar_order_observables,
    integrate_block,
    integrate_liouville,
    observables_to_rho,
    pauli,
    rho_to_observables,
    run_scenario_file,
    singlet_observables,
    spectral_analysis,
    spherical_harmonic_y2,
    steady_state,
    steady_state_common_closed_form,
    steady_state_regular_closed_form,
    thermal_observables,
    triplet_observables,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
