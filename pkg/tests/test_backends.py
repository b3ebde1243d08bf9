"""Parity between the numba kernels and the pure-numpy fallback."""

import os
import subprocess
import sys

import numpy as np
import pytest

from kgsim import backend
from kgsim.state import apply_circuit, basis_state, dense_matrix, from_amplitudes

from conftest import random_circuit, random_state


@pytest.fixture
def restore_backend():
    before = backend.active()
    yield
    backend._active = before


def test_both_flavors_available():
    assert "numpy" in backend.available()
    assert "numba" in backend.available()


def test_use_rejects_unknown():
    with pytest.raises(ValueError):
        backend.use("fortran")


def test_flavor_parity_on_random_circuits(restore_backend):
    rng = np.random.default_rng(42)
    for trial in range(10):
        n = int(rng.integers(1, 7))
        circuit = random_circuit(n, 120, rng)
        state = random_state(n, rng)

        backend.use("numpy")
        out_numpy = apply_circuit(from_amplitudes(state), circuit).amplitudes
        backend.use("numba")
        out_numba = apply_circuit(from_amplitudes(state), circuit).amplitudes

        np.testing.assert_allclose(out_numba, out_numpy, atol=1e-14)


def test_flavor_parity_dense_matrix(restore_backend):
    rng = np.random.default_rng(43)
    circuit = random_circuit(4, 60, rng)
    backend.use("numpy")
    m_numpy = dense_matrix(circuit)
    backend.use("numba")
    m_numba = dense_matrix(circuit)
    np.testing.assert_allclose(m_numba, m_numpy, atol=1e-14)


def test_numpy_backend_passes_basic_gates(restore_backend):
    backend.use("numpy")
    out = apply_circuit(basis_state(2, 3), random_circuit(2, 30, np.random.default_rng(1)))
    assert abs(np.linalg.norm(out.amplitudes) - 1.0) <= 1e-12


@pytest.mark.parametrize("name", ["numpy", "numba"])
def test_env_flag_selects_backend(name):
    code = "import kgsim.backend as b; print(b.active().NAME)"
    env = dict(os.environ, KGSIM_BACKEND=name)
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == name


def test_env_flag_rejects_unknown_value():
    code = "import kgsim.backend"
    env = dict(os.environ, KGSIM_BACKEND="cuda")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.returncode != 0
    assert "KGSIM_BACKEND" in out.stderr
