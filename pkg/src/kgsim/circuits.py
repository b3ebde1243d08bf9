"""Reusable circuit blocks: QFT, diagonal-phase synthesis, OpenQASM export.

The Fourier transform here is the unitary DFT with a +2*pi*i exponent,
entry (k, j) = e^{2*pi*i*k*j/N} / sqrt(N), realized from Hadamards and
controlled phases with the qubit-reversal swaps included, so callers see the
plain DFT matrix in site ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi

import numpy as np

from .state import (
    Circuit,
    ControlledPhase,
    GateOp,
    GlobalPhase,
    Hadamard,
    PhaseShift,
    SiteDiagonalPhase,
    Swap,
)

QFT_QUBIT_CAP = 12
SYNTHESIS_QUBIT_CAP = 6


@dataclass(frozen=True, eq=False)
class DiagonalSpec:
    """Target diagonal unitary diag(e^{i*phases_j}) over 2**n sites."""

    num_qubits: int
    phases: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "phases", np.asarray(self.phases, dtype=np.float64))
        if self.phases.shape != (1 << self.num_qubits,):
            raise ValueError(
                f"phase list has length {self.phases.size}, expected {1 << self.num_qubits}"
            )

    def phase_factors(self) -> np.ndarray:
        return np.exp(1j * self.phases)


def _check_qft_size(n: int) -> None:
    if not 1 <= n <= QFT_QUBIT_CAP:
        raise ValueError(f"qubit count must be in [1, {QFT_QUBIT_CAP}], got {n}")


def qft_circuit(n: int, include_swaps: bool = True) -> Circuit:
    """Fourier transform on n qubits from Hadamards and controlled phases.

    Uses exactly n Hadamards, n(n-1)/2 controlled phases and, when
    `include_swaps` is left on, floor(n/2) qubit-reversal swaps. Disabling the
    swaps yields the bit-reversed variant for gate-count studies.
    """
    _check_qft_size(n)
    gates: list[GateOp] = []
    for q in range(n - 1, -1, -1):
        gates.append(Hadamard(q))
        for m in range(q - 1, -1, -1):
            gates.append(ControlledPhase(m, q, pi / (1 << (q - m))))
    if include_swaps:
        for k in range(n // 2):
            gates.append(Swap(k, n - 1 - k))
    return Circuit(n, tuple(gates), label=f"qft{n}")


def inverse_qft_circuit(n: int, include_swaps: bool = True) -> Circuit:
    """Conjugate transpose of `qft_circuit(n)`."""
    _check_qft_size(n)
    inv = qft_circuit(n, include_swaps=include_swaps).inverse()
    return Circuit(n, inv.gates, label=f"iqft{n}")


def dft_matrix(n: int) -> np.ndarray:
    """The unitary DFT matrix the QFT circuit must reproduce."""
    size = 1 << n
    k = np.arange(size)
    return np.exp(2j * pi * np.outer(k, k) / size) / np.sqrt(size)


def _monomial_coefficients(phases: np.ndarray, n: int) -> np.ndarray:
    """Expand site phases over bit-product monomials via Moebius inversion.

    Returns c indexed by qubit mask: phases[j] = sum over masks S subset of j
    of c[S]. c[0] is a plain global phase; single-bit masks are phase shifts;
    two-bit masks are controlled phases; larger masks need parity tricks.
    """
    c = phases.astype(np.float64).copy()
    for q in range(n):
        bit = 1 << q
        for j in range(1 << n):
            if j & bit:
                c[j] -= c[j ^ bit]
    return c


def _bits(mask: int) -> list[int]:
    return [q for q in range(mask.bit_length()) if mask >> q & 1]


def _cnot(control: int, target: int) -> list[GateOp]:
    # CNOT from the phase vocabulary: H . CZ . H on the target.
    return [Hadamard(target), ControlledPhase(control, target, pi), Hadamard(target)]


def _parity_phase_gates(mask: int, angle: float) -> list[GateOp]:
    """e^{i*angle} on basis states of odd parity over the masked qubits."""
    qubits = _bits(mask)
    target = qubits[-1]
    chain: list[GateOp] = []
    for q in qubits[:-1]:
        chain.extend(_cnot(q, target))
    unchain = list(reversed(chain))
    return chain + [PhaseShift(target, angle)] + unchain


def synthesize_diagonal(spec: DiagonalSpec) -> Circuit:
    """Exact elementary-gate circuit for diag(e^{i*phases_j}).

    Phases are first expanded over bit-product monomials; constant, single-bit
    and two-bit terms map directly onto GlobalPhase / PhaseShift /
    ControlledPhase. Higher monomials are converted to parity terms realized
    with CNOT chains (each CNOT built from H and CZ), keeping the result exact
    including global phase.
    """
    n = spec.num_qubits
    if n > SYNTHESIS_QUBIT_CAP:
        raise ValueError(f"diagonal synthesis capped at {SYNTHESIS_QUBIT_CAP} qubits (got {n})")
    coeff = _monomial_coefficients(spec.phases, n)

    single = {1 << q: 0.0 for q in range(n)}
    pair: dict[int, float] = {}
    parity: dict[int, float] = {}

    for mask in range(1, 1 << n):
        c = float(coeff[mask])
        if c == 0.0:
            continue
        k = mask.bit_count()
        if k == 1:
            single[mask] += c
        elif k == 2:
            pair[mask] = pair.get(mask, 0.0) + c
        else:
            # Monomial over S as parities: prod(x_q) = sum over non-empty
            # T subset of S of (-1)^(|T|-1) * parity_T(x) / 2^(|S|-1).
            weight = c / (1 << (k - 1))
            t = mask
            while t:
                term = weight if t.bit_count() % 2 else -weight
                if t.bit_count() == 1:
                    single[t] += term
                elif t.bit_count() == 2:
                    # parity(a, b) = x_a + x_b - 2*x_a*x_b
                    lo = t & -t
                    single[lo] += term
                    single[t ^ lo] += term
                    pair[t] = pair.get(t, 0.0) - 2.0 * term
                else:
                    parity[t] = parity.get(t, 0.0) + term
                t = (t - 1) & mask

    gates: list[GateOp] = []
    for mask in sorted(single):
        if single[mask] != 0.0:
            gates.append(PhaseShift(_bits(mask)[0], single[mask]))
    for mask in sorted(pair):
        if pair[mask] != 0.0:
            lo, hi = _bits(mask)
            gates.append(ControlledPhase(hi, lo, pair[mask]))
    for mask in sorted(parity):
        if parity[mask] != 0.0:
            gates.extend(_parity_phase_gates(mask, parity[mask]))
    if float(coeff[0]) != 0.0 or not gates:
        gates.insert(0, GlobalPhase(float(coeff[0])))

    return Circuit(n, tuple(gates), label="diag")


def synthesize_circuit(circuit: Circuit) -> Circuit:
    """Replace every SiteDiagonalPhase with its elementary-gate synthesis."""
    gates: list[GateOp] = []
    for gate in circuit.gates:
        if isinstance(gate, SiteDiagonalPhase):
            spec = DiagonalSpec(circuit.num_qubits, gate.angles)
            gates.extend(synthesize_diagonal(spec).gates)
        else:
            gates.append(gate)
    return Circuit(circuit.num_qubits, tuple(gates), label=circuit.label)


_QASM_HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def to_openqasm(circuit: Circuit) -> str:
    """Serialize to OpenQASM 2.0 text; byte-stable for a fixed circuit.

    Site-diagonal phases must be synthesized into elementary gates first;
    global phases, which QASM 2.0 cannot express, become comment lines in
    place. Every qubit is measured at the end.
    """
    n = circuit.num_qubits
    lines = [_QASM_HEADER + f"qreg q[{n}];\ncreg c[{n}];"]
    for gate in circuit.gates:
        if isinstance(gate, Hadamard):
            lines.append(f"h q[{gate.target}];")
        elif isinstance(gate, PhaseShift):
            lines.append(f"u1({_fmt(gate.angle)}) q[{gate.target}];")
        elif isinstance(gate, ControlledPhase):
            lines.append(f"cu1({_fmt(gate.angle)}) q[{gate.control}],q[{gate.target}];")
        elif isinstance(gate, Swap):
            lines.append(f"swap q[{gate.a}],q[{gate.b}];")
        elif isinstance(gate, GlobalPhase):
            lines.append(f"// global phase: {_fmt(gate.angle)}")
        elif isinstance(gate, SiteDiagonalPhase):
            raise ValueError("synthesize SiteDiagonalPhase gates before QASM export")
        else:
            raise TypeError(f"not a gate: {gate!r}")
    for q in range(n):
        lines.append(f"measure q[{q}] -> c[{q}];")
    return "\n".join(lines) + "\n"
