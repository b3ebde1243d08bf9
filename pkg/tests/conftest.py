from __future__ import annotations

import numpy as np
import pytest

from kgsim import backend
from kgsim.state import (
    Circuit,
    ControlledPhase,
    GlobalPhase,
    Hadamard,
    PhaseShift,
    SiteDiagonalPhase,
    Swap,
)


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the numba kernels once so timed tests see steady-state costs."""
    if "numba" in backend.available():
        backend.use("numba").warmup()
    yield


def random_circuit(n: int, num_gates: int, rng: np.random.Generator, label: str = "") -> Circuit:
    """Random circuit over the full gate vocabulary."""
    gates = []
    for _ in range(num_gates):
        kind = rng.integers(0, 6)
        if kind == 0:
            gates.append(Hadamard(int(rng.integers(n))))
        elif kind == 1:
            gates.append(PhaseShift(int(rng.integers(n)), float(rng.uniform(-np.pi, np.pi))))
        elif kind == 2 and n >= 2:
            a, b = rng.choice(n, size=2, replace=False)
            gates.append(ControlledPhase(int(a), int(b), float(rng.uniform(-np.pi, np.pi))))
        elif kind == 3 and n >= 2:
            a, b = rng.choice(n, size=2, replace=False)
            gates.append(Swap(int(a), int(b)))
        elif kind == 4:
            gates.append(SiteDiagonalPhase(rng.uniform(-np.pi, np.pi, 1 << n)))
        else:
            gates.append(GlobalPhase(float(rng.uniform(-np.pi, np.pi))))
    return Circuit(n, tuple(gates), label=label)


def random_state(n: int, rng: np.random.Generator) -> np.ndarray:
    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return amps / np.linalg.norm(amps)
