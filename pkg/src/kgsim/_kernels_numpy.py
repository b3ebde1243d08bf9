"""Pure-numpy gate kernels.

Reference semantics for the hot inner loops: every kernel mutates a 1-D
complex128 amplitude array of length 2**n in place. Basis index j carries
qubit 0 as its least-significant bit, so the amplitudes for target qubit q
split into contiguous blocks of stride 2**q under ``reshape(-1, 2, 2**q)``.
"""

from __future__ import annotations

import numpy as np

NAME = "numpy"

_SQRT_HALF = 2.0**-0.5


def hadamard(amps: np.ndarray, q: int) -> None:
    view = amps.reshape(-1, 2, 1 << q)
    lo = view[:, 0, :].copy()
    hi = view[:, 1, :]
    view[:, 0, :] = (lo + hi) * _SQRT_HALF
    view[:, 1, :] = (lo - hi) * _SQRT_HALF


def phase(amps: np.ndarray, q: int, angle: float) -> None:
    view = amps.reshape(-1, 2, 1 << q)
    view[:, 1, :] *= complex(np.cos(angle), np.sin(angle))


def cphase(amps: np.ndarray, qa: int, qb: int, angle: float) -> None:
    # qa < qb; the gate is symmetric in its two qubits. Reshape the full
    # contiguous buffer (a slice-then-reshape may copy and drop the update).
    view = amps.reshape(-1, 2, 1 << (qb - qa - 1), 2, 1 << qa)
    view[:, 1, :, 1, :] *= complex(np.cos(angle), np.sin(angle))


def swap(amps: np.ndarray, qa: int, qb: int) -> None:
    # qa < qb; exchange the (bit_b, bit_a) = (1, 0) and (0, 1) blocks.
    view = amps.reshape(-1, 2, 1 << (qb - qa - 1), 2, 1 << qa)
    onezero = view[:, 1, :, 0, :].copy()
    view[:, 1, :, 0, :] = view[:, 0, :, 1, :]
    view[:, 0, :, 1, :] = onezero


def diagonal(amps: np.ndarray, factors: np.ndarray) -> None:
    amps *= factors


def scale(amps: np.ndarray, factor: complex) -> None:
    amps *= factor
