"""Numba-jitted gate kernels.

Same contract as :mod:`kgsim._kernels_numpy`: in-place updates of a 1-D
complex128 amplitude array, qubit 0 least significant. Loop indices follow
the usual bit-insertion trick: iterating g over 2**(n-1) values and
re-inserting the target bit enumerates every amplitude pair exactly once.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

NAME = "numba"

_SQRT_HALF = 2.0**-0.5


@njit(cache=True)
def hadamard(amps, q):
    half = amps.shape[0] >> 1
    tk = 1 << q
    for g in range(half):
        i0 = ((g >> q) << (q + 1)) + (g & (tk - 1))
        i1 = i0 + tk
        a = amps[i0]
        b = amps[i1]
        amps[i0] = (a + b) * _SQRT_HALF
        amps[i1] = (a - b) * _SQRT_HALF


@njit(cache=True)
def phase(amps, q, angle):
    f = complex(math.cos(angle), math.sin(angle))
    half = amps.shape[0] >> 1
    tk = 1 << q
    for g in range(half):
        i1 = ((g >> q) << (q + 1)) + (g & (tk - 1)) + tk
        amps[i1] *= f


@njit(cache=True)
def cphase(amps, qa, qb, angle):
    # qa < qb; touch only amplitudes with both bits set.
    f = complex(math.cos(angle), math.sin(angle))
    quarter = amps.shape[0] >> 2
    ta = 1 << qa
    tb = 1 << qb
    for g in range(quarter):
        i = ((g >> qa) << (qa + 1)) + (g & (ta - 1)) + ta
        i = ((i >> qb) << (qb + 1)) + (i & (tb - 1)) + tb
        amps[i] *= f


@njit(cache=True)
def swap(amps, qa, qb):
    # qa < qb; exchange the (bit_b, bit_a) = (1, 0) and (0, 1) amplitudes.
    quarter = amps.shape[0] >> 2
    ta = 1 << qa
    tb = 1 << qb
    for g in range(quarter):
        base = ((g >> qa) << (qa + 1)) + (g & (ta - 1))
        base = ((base >> qb) << (qb + 1)) + (base & (tb - 1))
        i01 = base + ta
        i10 = base + tb
        tmp = amps[i01]
        amps[i01] = amps[i10]
        amps[i10] = tmp


@njit(cache=True)
def diagonal(amps, factors):
    for i in range(amps.shape[0]):
        amps[i] *= factors[i]


@njit(cache=True)
def scale(amps, factor):
    for i in range(amps.shape[0]):
        amps[i] *= factor


def warmup() -> None:
    """Trigger JIT compilation of every kernel on a tiny register."""
    amps = np.zeros(4, dtype=np.complex128)
    amps[0] = 1.0
    hadamard(amps, 0)
    phase(amps, 0, 0.1)
    cphase(amps, 0, 1, 0.1)
    swap(amps, 0, 1)
    diagonal(amps, np.ones(4, dtype=np.complex128))
    scale(amps, 1.0 + 0.0j)
