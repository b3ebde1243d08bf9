"""Dense state-vector register, gate vocabulary, and circuit application.

A register of n qubits holds 2**n complex amplitudes; basis index j encodes
lattice site j with qubit 0 as the least-significant bit. The gate vocabulary
is deliberately small — Hadamard plus pure phases and permutations — so every
gate is exactly unitary by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import backend

DENSE_QUBIT_CAP = 12


@dataclass(frozen=True)
class Hadamard:
    target: int


@dataclass(frozen=True)
class PhaseShift:
    """diag(1, e^{i*angle}) on the target qubit."""

    target: int
    angle: float


@dataclass(frozen=True)
class ControlledPhase:
    """e^{i*angle} on basis states where both qubits are 1 (symmetric)."""

    control: int
    target: int
    angle: float

    def __post_init__(self):
        if self.control == self.target:
            raise ValueError("controlled phase needs distinct control and target")


@dataclass(frozen=True)
class Swap:
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("swap needs two distinct qubits")


@dataclass(frozen=True)
class GlobalPhase:
    """Multiplies the whole register by e^{i*angle}; tracked, never dropped."""

    angle: float


@dataclass(frozen=True, eq=False)
class SiteDiagonalPhase:
    """diag(e^{i*angles_j}) over all 2**n basis states."""

    angles: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "angles", np.asarray(self.angles, dtype=np.float64))


GateOp = Hadamard | PhaseShift | ControlledPhase | Swap | GlobalPhase | SiteDiagonalPhase


def inverse_gate(gate: GateOp) -> GateOp:
    """The exact inverse: negated angles; H and Swap are self-inverse."""
    if isinstance(gate, (Hadamard, Swap)):
        return gate
    if isinstance(gate, PhaseShift):
        return PhaseShift(gate.target, -gate.angle)
    if isinstance(gate, ControlledPhase):
        return ControlledPhase(gate.control, gate.target, -gate.angle)
    if isinstance(gate, GlobalPhase):
        return GlobalPhase(-gate.angle)
    if isinstance(gate, SiteDiagonalPhase):
        return SiteDiagonalPhase(-gate.angles)
    raise TypeError(f"not a gate: {gate!r}")


def _gate_qubits(gate: GateOp) -> tuple[int, ...]:
    if isinstance(gate, Hadamard):
        return (gate.target,)
    if isinstance(gate, PhaseShift):
        return (gate.target,)
    if isinstance(gate, ControlledPhase):
        return (gate.control, gate.target)
    if isinstance(gate, Swap):
        return (gate.a, gate.b)
    return ()


@dataclass(frozen=True)
class Circuit:
    """An ordered gate sequence; application order is left to right."""

    num_qubits: int
    gates: tuple[GateOp, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.num_qubits < 1:
            raise ValueError("circuit needs at least one qubit")
        for gate in self.gates:
            _validate_gate(gate, self.num_qubits)

    def inverse(self) -> "Circuit":
        gates = tuple(inverse_gate(g) for g in reversed(self.gates))
        return Circuit(self.num_qubits, gates, label=f"inverse({self.label})" if self.label else "")

    def __len__(self) -> int:
        return len(self.gates)


def _validate_gate(gate: GateOp, num_qubits: int) -> None:
    for q in _gate_qubits(gate):
        if not 0 <= q < num_qubits:
            raise ValueError(f"qubit index {q} out of range for {num_qubits}-qubit register")
    if isinstance(gate, SiteDiagonalPhase) and gate.angles.shape != (1 << num_qubits,):
        raise ValueError(
            f"diagonal phase list has length {gate.angles.size}, expected {1 << num_qubits}"
        )


@dataclass
class StateVector:
    """2**n complex amplitudes; treated as a value by every operation."""

    num_qubits: int
    amplitudes: np.ndarray = field(repr=False)

    def copy(self) -> "StateVector":
        return StateVector(self.num_qubits, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def basis_state(num_qubits: int, site: int) -> StateVector:
    """|site> on an n-qubit register."""
    if num_qubits < 1:
        raise ValueError("need at least one qubit")
    size = 1 << num_qubits
    if not 0 <= site < size:
        raise ValueError(f"site {site} out of range for {num_qubits} qubits")
    amps = np.zeros(size, dtype=np.complex128)
    amps[site] = 1.0
    return StateVector(num_qubits, amps)


def from_amplitudes(amplitudes) -> StateVector:
    """Wrap an explicit amplitude list; length must be a power of two."""
    amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
    n = int(amps.size).bit_length() - 1
    if amps.size != 1 << n or amps.size < 2:
        raise ValueError(f"amplitude count {amps.size} is not a power of two >= 2")
    return StateVector(n, amps.copy())


def _apply_gate_inplace(amps: np.ndarray, gate: GateOp, num_qubits: int) -> None:
    k = backend.active()
    _validate_gate(gate, num_qubits)
    if isinstance(gate, Hadamard):
        k.hadamard(amps, gate.target)
    elif isinstance(gate, PhaseShift):
        k.phase(amps, gate.target, gate.angle)
    elif isinstance(gate, ControlledPhase):
        qa, qb = sorted((gate.control, gate.target))
        k.cphase(amps, qa, qb, gate.angle)
    elif isinstance(gate, Swap):
        qa, qb = sorted((gate.a, gate.b))
        k.swap(amps, qa, qb)
    elif isinstance(gate, GlobalPhase):
        k.scale(amps, complex(np.cos(gate.angle), np.sin(gate.angle)))
    elif isinstance(gate, SiteDiagonalPhase):
        k.diagonal(amps, np.exp(1j * gate.angles))
    else:
        raise TypeError(f"not a gate: {gate!r}")


def apply_gate(state: StateVector, gate: GateOp) -> StateVector:
    """Apply one gate, returning a new state."""
    out = state.copy()
    _apply_gate_inplace(out.amplitudes, gate, out.num_qubits)
    return out


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    """Fold the circuit's gates over the state in order."""
    if circuit.num_qubits != state.num_qubits:
        raise ValueError(
            f"circuit acts on {circuit.num_qubits} qubits, state has {state.num_qubits}"
        )
    out = state.copy()
    for gate in circuit.gates:
        _apply_gate_inplace(out.amplitudes, gate, out.num_qubits)
    return out


def dense_matrix(circuit: Circuit) -> np.ndarray:
    """Materialize the circuit's unitary; column j is the image of |j>."""
    n = circuit.num_qubits
    if n > DENSE_QUBIT_CAP:
        raise ValueError(f"dense materialization capped at {DENSE_QUBIT_CAP} qubits (got {n})")
    size = 1 << n
    rows = np.eye(size, dtype=np.complex128)
    for j in range(size):
        for gate in circuit.gates:
            _apply_gate_inplace(rows[j], gate, n)
    return np.ascontiguousarray(rows.T)


def site_probabilities(state: StateVector) -> np.ndarray:
    """|amplitude_j|^2 for every lattice site j."""
    return np.abs(state.amplitudes) ** 2


def sample_measurements(state: StateVector, shots: int, seed: int | None = None) -> dict[int, int]:
    """Histogram of site measurements; deterministic for a fixed seed."""
    if shots < 1:
        raise ValueError("shots must be >= 1")
    probs = site_probabilities(state)
    probs = probs / probs.sum()
    rng = np.random.default_rng(seed)
    counts = rng.multinomial(shots, probs)
    return {site: int(c) for site, c in enumerate(counts) if c > 0}


def site_label(site: int, num_qubits: int) -> str:
    """Ket label for a lattice site, e.g. site 2 on two qubits -> '|10>'."""
    return "|" + format(site, f"0{num_qubits}b") + ">"
