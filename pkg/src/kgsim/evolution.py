"""Lattice dynamics of the two-component relativistic wave equation.

The particle and anti-particle components each evolve under an effective
Hamiltonian built from a momentum-space kinetic term and a site-diagonal
potential. One Trotter step conjugates a kinetic phase by the Fourier
transform (applied twice per step by default) and multiplies by a potential
phase; the dense oracles exponentiate the same Hamiltonians exactly and are
built from the DFT formula rather than from gates, so the two routes stay
independent.

Units: hbar = 1 and c = 1/sqrt(2) are fixed. The rest-energy offset that
splits the two component potentials is pinned to +-1 at the default mass 0.5,
matching the convention in which the barrier V0 = 11 yields component
potentials 12 and 10.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .circuits import DiagonalSpec, dft_matrix, inverse_qft_circuit, qft_circuit
from .errors import NumericsError
from .state import Circuit, GateOp, SiteDiagonalPhase, StateVector, apply_circuit

ORACLE_QUBIT_CAP = 8
TWO_COMPONENT_ORACLE_QUBIT_CAP = 7

MIRRORED = "mirrored"
STANDARD_FFT = "standard-fft"
CONVENTIONS = (MIRRORED, STANDARD_FFT)

FIRST_ORDER = "first-order"
STRANG = "strang"
SPLITTINGS = (FIRST_ORDER, STRANG)


class Component(enum.Enum):
    """Which component of the two-component wavefunction is simulated."""

    PARTICLE = "particle"
    ANTIPARTICLE = "antiparticle"

    @property
    def kinetic_sign(self) -> float:
        """Sign of the kinetic exponent: e^{-i p^2/2m dt} for the particle."""
        return -1.0 if self is Component.PARTICLE else 1.0

    @property
    def rest_sign(self) -> float:
        """Sign of the rest-energy offset in the component potential."""
        return 1.0 if self is Component.PARTICLE else -1.0


@dataclass(frozen=True)
class UnitSystem:
    """Natural units with a pinned rest-energy offset.

    `rest_energy` feeds the component potentials V +- rest_energy; it is
    defined as 2*mass so the default mass of 0.5 gives the +-1 offset.
    """

    hbar: float = 1.0
    c: float = 2.0**-0.5
    mass: float = 0.5

    def __post_init__(self):
        if self.mass <= 0:
            raise ValueError("mass must be positive")

    @property
    def rest_energy(self) -> float:
        return 2.0 * self.mass


SIGMA_Z_BARRIER = "sigma-z-barrier"
EXPLICIT_SITES = "explicit-sites"


@dataclass(frozen=True)
class PotentialProfile:
    """Site potential V(x_j): either explicit values or the sigma-z preset.

    The sigma-z preset alternates +v0 / -v0 with the qubit-0 bit; once
    exponentiated this is the tensor form I (x) e^{-i v0 sigma_z t}.
    """

    num_sites: int
    site_values: tuple[float, ...]
    v0: float = 11.0
    preset: str = EXPLICIT_SITES

    def __post_init__(self):
        if len(self.site_values) != self.num_sites:
            raise ValueError(
                f"potential has {len(self.site_values)} sites, expected {self.num_sites}"
            )
        object.__setattr__(self, "site_values", tuple(float(v) for v in self.site_values))

    @classmethod
    def explicit(cls, site_values) -> "PotentialProfile":
        values = tuple(float(v) for v in site_values)
        v0 = max(values, default=0.0)
        return cls(len(values), values, v0=v0, preset=EXPLICIT_SITES)

    @classmethod
    def sigma_z_barrier(cls, num_qubits: int, v0: float = 11.0) -> "PotentialProfile":
        size = 1 << num_qubits
        values = tuple(v0 if j % 2 == 0 else -v0 for j in range(size))
        return cls(size, values, v0=v0, preset=SIGMA_Z_BARRIER)

    @classmethod
    def free(cls, num_qubits: int) -> "PotentialProfile":
        size = 1 << num_qubits
        return cls(size, (0.0,) * size, v0=0.0, preset=EXPLICIT_SITES)

    def values(self) -> np.ndarray:
        return np.asarray(self.site_values, dtype=np.float64)


@dataclass(frozen=True, eq=False)
class MomentumTable:
    """Momentum eigenvalue grid and the kinetic diagonal p^2/(2m)."""

    num_qubits: int
    convention: str
    mass: float
    eigenvalues: np.ndarray
    kinetic_diagonal: np.ndarray


def momentum_eigenvalues(
    n: int, convention: str = MIRRORED, mass: float = 0.5
) -> MomentumTable:
    """Momentum grid for n qubits under the chosen labeling convention.

    The default `mirrored` convention assigns p_j = (2*pi/2^n) * j on the
    lower half-grid (j <= 2^(n-1) inclusive) and mirrors the positive branch,
    p_j = (2*pi/2^n) * (2^(n-1) - j), above it. `standard-fft` uses the usual
    FFT frequency order instead; the two agree on p^2 for n <= 2 but differ
    for n >= 3.
    """
    if not 1 <= n <= 12:
        raise ValueError(f"qubit count must be in [1, 12], got {n}")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown momentum convention {convention!r}; use one of {CONVENTIONS}")
    size = 1 << n
    half = size >> 1
    j = np.arange(size)
    step = 2.0 * np.pi / size
    if convention == MIRRORED:
        p = np.where(j <= half, step * j, step * (half - j))
    else:
        p = step * np.where(j < half, j, j - size)
    kinetic = p**2 / (2.0 * mass)
    return MomentumTable(n, convention, mass, p, kinetic)


@dataclass(frozen=True)
class LatticeConfig:
    """Everything static about one simulated lattice.

    `kinetic_applications` controls how many kinetic factors one Trotter step
    carries (the doubled form is the default); `include_rest_energy` keeps the
    +-rest-energy offset in the component potentials, which is a pure global
    phase per component and exists for faithfulness, not for observables.
    """

    num_qubits: int
    potential: PotentialProfile
    units: UnitSystem = UnitSystem()
    convention: str = MIRRORED
    kinetic_applications: int = 2
    include_rest_energy: bool = True

    def __post_init__(self):
        if self.potential.num_sites != 1 << self.num_qubits:
            raise ValueError(
                f"potential covers {self.potential.num_sites} sites, lattice has {1 << self.num_qubits}"
            )
        if self.kinetic_applications not in (1, 2):
            raise ValueError("kinetic_applications must be 1 or 2")
        object.__setattr__(
            self,
            "_table",
            momentum_eigenvalues(self.num_qubits, self.convention, self.units.mass),
        )

    @property
    def num_sites(self) -> int:
        return 1 << self.num_qubits

    def momentum_table(self) -> MomentumTable:
        return self._table


@dataclass(frozen=True)
class EvolutionParams:
    """Total evolution time (may be negative) and the step count."""

    total_time: float
    trotter_steps: int
    splitting: str = FIRST_ORDER

    def __post_init__(self):
        if self.trotter_steps < 1:
            raise ValueError("trotter_steps must be >= 1")
        if self.splitting not in SPLITTINGS:
            raise ValueError(f"unknown splitting {self.splitting!r}; use one of {SPLITTINGS}")

    @property
    def dt(self) -> float:
        return self.total_time / self.trotter_steps


def kinetic_phase(table: MomentumTable, dt: float, component: Component) -> DiagonalSpec:
    """Momentum-space phases for one kinetic factor over time dt."""
    return DiagonalSpec(table.num_qubits, component.kinetic_sign * table.kinetic_diagonal * dt)


def component_potential(
    profile: PotentialProfile,
    units: UnitSystem,
    component: Component,
    include_rest_energy: bool = True,
) -> np.ndarray:
    """Site potential for one component: V(x) +- rest energy."""
    shift = units.rest_energy if include_rest_energy else 0.0
    return profile.values() + component.rest_sign * shift


def potential_phase(
    profile: PotentialProfile,
    units: UnitSystem,
    dt: float,
    component: Component,
    include_rest_energy: bool = True,
) -> DiagonalSpec:
    """Site-space phases e^{-i V_i(x) dt} for the component potential."""
    v = component_potential(profile, units, component, include_rest_energy)
    size = profile.num_sites
    n = size.bit_length() - 1
    if size != 1 << n:
        raise ValueError(f"potential size {size} is not a power of two")
    return DiagonalSpec(n, -v * dt)


def _kinetic_block(lattice: LatticeConfig, component: Component, dt: float) -> list[GateOp]:
    spec = kinetic_phase(lattice.momentum_table(), dt, component)
    return [
        *inverse_qft_circuit(lattice.num_qubits).gates,
        SiteDiagonalPhase(spec.phases),
        *qft_circuit(lattice.num_qubits).gates,
    ]


def trotter_step_circuit(
    lattice: LatticeConfig,
    component: Component,
    dt: float,
    splitting: str = FIRST_ORDER,
) -> Circuit:
    """One Trotter step as a circuit, in application order.

    First-order splitting applies the potential phase and then the kinetic
    conjugation block `kinetic_applications` times; Strang splitting brackets
    the kinetic blocks with two half-angle potential phases. A zero dt
    collapses to a trivially-identity circuit.
    """
    if splitting not in SPLITTINGS:
        raise ValueError(f"unknown splitting {splitting!r}; use one of {SPLITTINGS}")
    n = lattice.num_qubits
    if dt == 0.0:
        return Circuit(n, (SiteDiagonalPhase(np.zeros(lattice.num_sites)),), label="step[dt=0]")

    def pot(step_dt: float) -> SiteDiagonalPhase:
        spec = potential_phase(
            lattice.potential, lattice.units, step_dt, component, lattice.include_rest_energy
        )
        return SiteDiagonalPhase(spec.phases)

    gates: list[GateOp] = []
    if splitting == FIRST_ORDER:
        gates.append(pot(dt))
        for _ in range(lattice.kinetic_applications):
            gates.extend(_kinetic_block(lattice, component, dt))
    else:
        gates.append(pot(dt / 2.0))
        for _ in range(lattice.kinetic_applications):
            gates.extend(_kinetic_block(lattice, component, dt))
        gates.append(pot(dt / 2.0))
    return Circuit(n, tuple(gates), label=f"step[{component.value},{splitting}]")


def evolve(
    initial: StateVector,
    component: Component,
    params: EvolutionParams,
    lattice: LatticeConfig,
) -> StateVector:
    """Apply the Trotter step circuit `trotter_steps` times with dt = t/r."""
    if initial.num_qubits != lattice.num_qubits:
        raise ValueError(
            f"state has {initial.num_qubits} qubits, lattice expects {lattice.num_qubits}"
        )
    step = trotter_step_circuit(lattice, component, params.dt, params.splitting)
    state = initial
    for _ in range(params.trotter_steps):
        state = apply_circuit(state, step)
    drift = abs(state.norm() - initial.norm())
    if drift > 1e-10:
        raise NumericsError(f"state norm drifted by {drift:.3e} during evolution")
    return state


def _kinetic_matrix(lattice: LatticeConfig) -> np.ndarray:
    """Dense kinetic operator F . diag(p^2/2m) . F^dagger from the DFT formula."""
    f = dft_matrix(lattice.num_qubits)
    return f @ np.diag(lattice.momentum_table().kinetic_diagonal) @ f.conj().T


@dataclass(frozen=True, eq=False)
class ComponentOracle:
    """Dense effective Hamiltonian of one component and its exact propagator.

    The Hamiltonian matches what the step circuits Trotterize: the kinetic
    matrix scaled by the configured number of applications and signed per
    component, plus the diagonal component potential. Eigendecomposition is
    done once at construction.
    """

    hamiltonian: np.ndarray
    _eigenvalues: np.ndarray = field(repr=False)
    _eigenvectors: np.ndarray = field(repr=False)

    def propagator(self, t: float) -> np.ndarray:
        phases = np.exp(-1j * self._eigenvalues * t)
        return (self._eigenvectors * phases) @ self._eigenvectors.conj().T

    def evolve(self, initial: StateVector, t: float) -> StateVector:
        return StateVector(initial.num_qubits, self.propagator(t) @ initial.amplitudes)


def exact_component_oracle(lattice: LatticeConfig, component: Component) -> ComponentOracle:
    if lattice.num_qubits > ORACLE_QUBIT_CAP:
        raise ValueError(f"component oracle capped at {ORACLE_QUBIT_CAP} qubits")
    kin = _kinetic_matrix(lattice)
    v = component_potential(
        lattice.potential, lattice.units, component, lattice.include_rest_energy
    )
    h = -component.kinetic_sign * lattice.kinetic_applications * kin + np.diag(v)
    hermiticity = np.max(np.abs(h - h.conj().T))
    if hermiticity > 1e-12:
        raise NumericsError(f"effective Hamiltonian not Hermitian: {hermiticity:.3e}")
    eigenvalues, eigenvectors = np.linalg.eigh(h)
    return ComponentOracle(h, eigenvalues, eigenvectors)


@dataclass(frozen=True, eq=False)
class TwoComponentOracle:
    """Dense two-component Hamiltonian (particle and anti-particle coupled).

    Block structure over (upper, lower): [[K + mc2 + V, K], [-K, -K - mc2 + V]].
    The off-diagonal coupling makes it non-Hermitian in the plain inner
    product, so the propagator uses scaling-and-squaring instead of an
    eigendecomposition.
    """

    hamiltonian: np.ndarray

    def propagator(self, t: float) -> np.ndarray:
        return scipy.linalg.expm(-1j * self.hamiltonian * t)

    def evolve_pair(self, upper: np.ndarray, lower: np.ndarray, t: float) -> tuple[np.ndarray, np.ndarray]:
        stacked = np.concatenate([upper, lower])
        out = self.propagator(t) @ stacked
        size = upper.size
        return out[:size], out[size:]


def feshbach_villars_oracle(lattice: LatticeConfig) -> TwoComponentOracle:
    if lattice.num_qubits > TWO_COMPONENT_ORACLE_QUBIT_CAP:
        raise ValueError(
            f"two-component oracle capped at {TWO_COMPONENT_ORACLE_QUBIT_CAP} qubits"
        )
    size = lattice.num_sites
    kin = _kinetic_matrix(lattice)
    v = np.diag(lattice.potential.values())
    mc2 = lattice.units.rest_energy
    eye = np.eye(size)
    h = np.block(
        [
            [kin + mc2 * eye + v, kin],
            [-kin, -kin - mc2 * eye + v],
        ]
    )
    return TwoComponentOracle(h)
