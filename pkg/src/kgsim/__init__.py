"""kgsim: gate-level state-vector simulation of relativistic barrier tunneling.

The package simulates the two-component relativistic wave equation on a small
qubit lattice: Trotterized propagators built from quantum Fourier transforms
and diagonal phase operators, an experiment harness for probability-vs-time
sweeps, dense matrix-exponential oracles for cross-checking, and exporters
(OpenQASM, CSV traces, SVG heatmaps).
"""

from .backend import active as active_backend
from .backend import available as available_backends
from .backend import use as use_backend
from .circuits import (
    DiagonalSpec,
    dft_matrix,
    inverse_qft_circuit,
    qft_circuit,
    synthesize_diagonal,
    to_openqasm,
)
from .errors import ConfigError, KgsimError, NumericsError, SchemaError
from .evolution import (
    Component,
    ComponentOracle,
    EvolutionParams,
    LatticeConfig,
    MomentumTable,
    PotentialProfile,
    TwoComponentOracle,
    UnitSystem,
    component_potential,
    evolve,
    exact_component_oracle,
    feshbach_villars_oracle,
    kinetic_phase,
    momentum_eigenvalues,
    potential_phase,
    trotter_step_circuit,
)
from .experiment import (
    ProbabilityTrace,
    expected_position,
    load_trace,
    persist_trace,
    run_time_sweep,
    transmission_fraction,
)
from .state import (
    Circuit,
    ControlledPhase,
    GateOp,
    GlobalPhase,
    Hadamard,
    PhaseShift,
    SiteDiagonalPhase,
    StateVector,
    Swap,
    apply_circuit,
    apply_gate,
    basis_state,
    dense_matrix,
    from_amplitudes,
    inverse_gate,
    sample_measurements,
    site_label,
    site_probabilities,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "active_backend",
    "apply_circuit",
    "apply_gate",
    "available_backends",
    "basis_state",
    "Circuit",
    "Component",
    "ComponentOracle",
    "component_potential",
    "ConfigError",
    "ControlledPhase",
    "dense_matrix",
    "dft_matrix",
    "DiagonalSpec",
    "EvolutionParams",
    "evolve",
    "exact_component_oracle",
    "expected_position",
    "feshbach_villars_oracle",
    "from_amplitudes",
    "GateOp",
    "GlobalPhase",
    "Hadamard",
    "inverse_gate",
    "inverse_qft_circuit",
    "KgsimError",
    "kinetic_phase",
    "LatticeConfig",
    "load_trace",
    "momentum_eigenvalues",
    "MomentumTable",
    "NumericsError",
    "persist_trace",
    "PhaseShift",
    "potential_phase",
    "PotentialProfile",
    "ProbabilityTrace",
    "qft_circuit",
    "run_time_sweep",
    "sample_measurements",
    "SchemaError",
    "site_label",
    "site_probabilities",
    "SiteDiagonalPhase",
    "StateVector",
    "Swap",
    "synthesize_diagonal",
    "to_openqasm",
    "transmission_fraction",
    "trotter_step_circuit",
    "TwoComponentOracle",
    "UnitSystem",
    "use_backend",
]
