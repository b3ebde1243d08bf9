#!/usr/bin/env python3
"""Benchmark the numba gate kernels against the pure-numpy fallback.

Times the two kernel flavors on identical workloads: random dense circuits,
repeated Fourier-transform blocks, and a full Trotter evolution sweep. Run
from a checkout with the package installed:

    python benchmarks/bench_kernels.py [--qubits 10] [--gates 2000] [--repeat 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from kgsim import backend
from kgsim.circuits import qft_circuit
from kgsim.evolution import Component, EvolutionParams, LatticeConfig, PotentialProfile, evolve
from kgsim.state import (
    Circuit,
    ControlledPhase,
    Hadamard,
    PhaseShift,
    SiteDiagonalPhase,
    Swap,
    apply_circuit,
    basis_state,
)


def random_circuit(n: int, num_gates: int, rng: np.random.Generator) -> Circuit:
    gates = []
    for _ in range(num_gates):
        kind = rng.integers(0, 5)
        if kind == 0:
            gates.append(Hadamard(int(rng.integers(n))))
        elif kind == 1:
            gates.append(PhaseShift(int(rng.integers(n)), float(rng.uniform(-np.pi, np.pi))))
        elif kind == 2:
            a, b = rng.choice(n, size=2, replace=False)
            gates.append(ControlledPhase(int(a), int(b), float(rng.uniform(-np.pi, np.pi))))
        elif kind == 3:
            a, b = rng.choice(n, size=2, replace=False)
            gates.append(Swap(int(a), int(b)))
        else:
            gates.append(SiteDiagonalPhase(rng.uniform(-np.pi, np.pi, 1 << n)))
    return Circuit(n, tuple(gates), label="bench")


def timed(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def workloads(n: int, num_gates: int):
    rng = np.random.default_rng(1234)
    circuit = random_circuit(n, num_gates, rng)
    state = basis_state(n, 0)
    qft = qft_circuit(n)

    lattice = LatticeConfig(
        min(n, 6), PotentialProfile.sigma_z_barrier(min(n, 6), 11.0), kinetic_applications=2
    )
    psi0 = basis_state(lattice.num_qubits, 0)
    params = EvolutionParams(1.0, 50)

    return [
        (f"random circuit ({num_gates} gates, n={n})", lambda: apply_circuit(state, circuit)),
        (f"qft x50 (n={n})", lambda: [apply_circuit(state, qft) for _ in range(50)]),
        (
            f"trotter evolve (r=50, n={lattice.num_qubits})",
            lambda: evolve(psi0, Component.PARTICLE, params, lattice),
        ),
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--qubits", type=int, default=10)
    parser.add_argument("--gates", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    flavors = backend.available()
    if "numba" in flavors:
        backend.use("numba")
        backend.active().warmup()

    results: dict[str, dict[str, float]] = {}
    for flavor in flavors:
        backend.use(flavor)
        for label, fn in workloads(args.qubits, args.gates):
            fn()  # warm caches (and JIT on first numba pass)
            results.setdefault(label, {})[flavor] = timed(fn, args.repeat)

    width = max(len(k) for k in results)
    header = f"{'workload':<{width}}  " + "  ".join(f"{f:>10}" for f in flavors)
    print(header)
    print("-" * len(header))
    for label, by_flavor in results.items():
        row = f"{label:<{width}}  " + "  ".join(f"{by_flavor[f]*1e3:9.2f}ms" for f in flavors)
        if "numba" in by_flavor and "numpy" in by_flavor:
            row += f"  (numpy/numba: {by_flavor['numpy'] / by_flavor['numba']:.2f}x)"
        print(row)


if __name__ == "__main__":
    main()
