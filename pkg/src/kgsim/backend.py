"""Gate-kernel backend selection.

The hot kernels exist in two interchangeable flavors: numba-jitted
(:mod:`kgsim._kernels_numba`) and pure numpy (:mod:`kgsim._kernels_numpy`).
The active flavor is picked once at import time from the ``KGSIM_BACKEND``
environment variable ("numba" or "numpy"). Without the variable, numba is
used when importable and numpy otherwise. `use()` switches at runtime, which
the benchmark and the backend-parity tests rely on.
"""

from __future__ import annotations

import os
import warnings

from . import _kernels_numpy

_BACKENDS = {"numpy": _kernels_numpy}

try:
    from . import _kernels_numba

    _BACKENDS["numba"] = _kernels_numba
except ImportError:
    _kernels_numba = None  # type: ignore[assignment]


def available() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def use(name: str):
    """Select the active kernel flavor; returns the kernel module."""
    global _active
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; available: {available()}") from None
    return _active


def active():
    """The currently selected kernel module."""
    return _active


def _initial_choice() -> str:
    name = os.environ.get("KGSIM_BACKEND", "").strip().lower()
    if not name:
        return "numba" if "numba" in _BACKENDS else "numpy"
    if name == "numba" and "numba" not in _BACKENDS:
        warnings.warn("KGSIM_BACKEND=numba requested but numba is not importable; using numpy")
        return "numpy"
    if name not in _BACKENDS:
        raise ValueError(f"KGSIM_BACKEND={name!r} is not one of {available()}")
    return name


_active = _BACKENDS[_initial_choice()]
