"""Driven, dissipative two-qubit simulator with correlation measures."""

from .hamiltonian import (
    PulseParams,
    SystemParams,
    build_drive_operator,
    build_static_hamiltonian,
    pulse_amplitude,
    total_hamiltonian,
)
from .lindblad import (
    CollapseChannel,
    DecoherenceRates,
    SimulationConfig,
    Trajectory,
    build_collapse_channels,
    evolve,
    lindblad_rhs,
    liouvillian_exponential_oracle,
    rk4_step,
)
from .measures import (
    BlochDecomposition,
    CorrelationSample,
    berta_bound,
    bloch_decompose,
    bloch_reconstruct,
    conditional_entropy_after_measurement,
    geometric_discord,
    measure_trajectory,
    negativity,
    qm_eur_approx,
    qm_eur_exact,
)
from .qmath import (
    HermitianEigen,
    dagger,
    hermitian_eigs,
    kron,
    partial_trace,
    partial_transpose,
    trace_norm,
    von_neumann_entropy,
)
from .scenarios import (
    FigureScenario,
    InitialState,
    SweepSpec,
    bell_state,
    builtin_scenarios,
    expand_sweep,
    run_scenario,
    scenario_registry,
    separable_state,
)

__all__ = [
    "BlochDecomposition",
    "CollapseChannel",
    "CorrelationSample",
    "DecoherenceRates",
    "FigureScenario",
    "HermitianEigen",
    "InitialState",
    "PulseParams",
    "SimulationConfig",
    "SweepSpec",
    "SystemParams",
    "Trajectory",
    "bell_state",
    "berta_bound",
    "bloch_decompose",
    "bloch_reconstruct",
    "build_collapse_channels",
    "build_drive_operator",
    "build_static_hamiltonian",
    "builtin_scenarios",
    "conditional_entropy_after_measurement",
    "dagger",
    "evolve",
    "expand_sweep",
    "geometric_discord",
    "hermitian_eigs",
    "kron",
    "lindblad_rhs",
    "liouvillian_exponential_oracle",
    "measure_trajectory",
    "negativity",
    "partial_trace",
    "partial_transpose",
    "pulse_amplitude",
    "qm_eur_approx",
    "qm_eur_exact",
    "rk4_step",
    "run_scenario",
    "scenario_registry",
    "separable_state",
    "total_hamiltonian",
    "trace_norm",
    "von_neumann_entropy",
]
