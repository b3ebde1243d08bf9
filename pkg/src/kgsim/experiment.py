"""Time sweeps, summary observables, and CSV trace persistence.

A sweep evaluates site probabilities on a time grid. In `independent` mode
every row restarts from the configured initial state and evolves to its own
t (the per-run-per-t procedure); `cumulative` mode instead carries the state
forward across a uniform grid with a fixed step, which is what a narrative
that starts on a negative time scale and marches through t = 0 needs.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ConfigError, SchemaError
from .evolution import Component, EvolutionParams, LatticeConfig, evolve
from .state import StateVector, basis_state, site_probabilities

TRACE_SCHEMA = "kgsim-trace/1"

INDEPENDENT = "independent"
CUMULATIVE = "cumulative"
SWEEP_MODES = (INDEPENDENT, CUMULATIVE)


@dataclass(eq=False)
class ProbabilityTrace:
    """Per-time site-probability rows plus the configuration that made them."""

    times: np.ndarray
    rows: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=np.float64)
        self.rows = np.asarray(self.rows, dtype=np.float64)
        if self.rows.shape[0] != self.times.size:
            raise ValueError("one probability row per time is required")
        if self.times.size and np.any(np.diff(self.times) <= 0):
            raise ValueError("times must be strictly increasing")

    @property
    def num_sites(self) -> int:
        return self.rows.shape[1]

    def row_at(self, t: float) -> np.ndarray:
        idx = int(np.argmin(np.abs(self.times - t)))
        if abs(self.times[idx] - t) > 1e-9:
            raise KeyError(f"no row at t={t}")
        return self.rows[idx]


def _validate_times(times) -> np.ndarray:
    arr = np.asarray(times, dtype=np.float64)
    if arr.size == 0:
        raise ValueError("time list must not be empty")
    if np.any(np.diff(arr) <= 0):
        raise ValueError("times must be strictly increasing")
    return arr


def run_time_sweep(
    lattice: LatticeConfig,
    component: Component,
    times,
    trotter_steps: int,
    splitting: str = "first-order",
    initial: StateVector | None = None,
    initial_site: int = 0,
    mode: str = INDEPENDENT,
    metadata: dict | None = None,
) -> ProbabilityTrace:
    """Evaluate site probabilities over a time grid.

    Independent mode evolves the initial state to each t with `trotter_steps`
    steps. Cumulative mode places the initial state at the first grid time and
    advances it row by row with dt = span / trotter_steps; the grid spacing
    must be a whole multiple of dt.
    """
    arr = _validate_times(times)
    if mode not in SWEEP_MODES:
        raise ValueError(f"unknown sweep mode {mode!r}; use one of {SWEEP_MODES}")
    if initial is None:
        initial = basis_state(lattice.num_qubits, initial_site)

    rows = np.empty((arr.size, lattice.num_sites), dtype=np.float64)
    if mode == INDEPENDENT:
        for i, t in enumerate(arr):
            params = EvolutionParams(float(t), trotter_steps, splitting)
            rows[i] = site_probabilities(evolve(initial, component, params, lattice))
    else:
        span = float(arr[-1] - arr[0])
        if span <= 0.0 or arr.size < 2:
            raise ConfigError("cumulative mode needs a grid spanning more than one time")
        dt = span / trotter_steps
        state = initial
        rows[0] = site_probabilities(state)
        for i in range(1, arr.size):
            gap = float(arr[i] - arr[i - 1])
            steps = gap / dt
            if abs(steps - round(steps)) > 1e-9 or round(steps) < 1:
                raise ConfigError(
                    f"grid gap {gap} is not a whole multiple of dt={dt} in cumulative mode"
                )
            params = EvolutionParams(gap, int(round(steps)), splitting)
            state = evolve(state, component, params, lattice)
            rows[i] = site_probabilities(state)

    meta = {
        "schema": TRACE_SCHEMA,
        "num_qubits": lattice.num_qubits,
        "component": component.value,
        "trotter_steps": trotter_steps,
        "splitting": splitting,
        "convention": lattice.convention,
        "kinetic_applications": lattice.kinetic_applications,
        "include_rest_energy": lattice.include_rest_energy,
        "mass": lattice.units.mass,
        "potential": list(lattice.potential.site_values),
        "potential_preset": lattice.potential.preset,
        "sweep_mode": mode,
    }
    if metadata:
        meta.update(metadata)
    meta["schema"] = TRACE_SCHEMA
    return ProbabilityTrace(arr, rows, meta)


def expected_position(row) -> float:
    """Mean lattice site sum_j j * p_j of one probability row."""
    p = np.asarray(row, dtype=np.float64)
    if abs(p.sum() - 1.0) > 1e-6:
        raise ValueError(f"probability row sums to {p.sum():.8f}, not 1")
    return float(np.arange(p.size) @ p)


def transmission_fraction(row, barrier_site: int) -> float:
    """Total probability strictly beyond the barrier site."""
    p = np.asarray(row, dtype=np.float64)
    if not 0 <= barrier_site < p.size:
        raise ValueError(f"barrier site {barrier_site} out of range for {p.size} sites")
    return float(p[barrier_site + 1 :].sum())


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def trace_to_csv(trace: ProbabilityTrace) -> str:
    """Render a trace as CSV text with a JSON metadata comment header."""
    meta = dict(trace.metadata)
    meta.setdefault("schema", TRACE_SCHEMA)
    out = io.StringIO()
    out.write("# " + json.dumps(meta, sort_keys=True, separators=(",", ":")) + "\n")
    out.write("t," + ",".join(f"p{j}" for j in range(trace.num_sites)) + "\n")
    for t, row in zip(trace.times, trace.rows):
        out.write(_fmt(t) + "," + ",".join(_fmt(p) for p in row) + "\n")
    return out.getvalue()


def persist_trace(trace: ProbabilityTrace, destination) -> None:
    """Write the CSV trace to a path."""
    Path(destination).write_text(trace_to_csv(trace), encoding="utf-8")


def trace_from_csv(text: str) -> ProbabilityTrace:
    lines = text.splitlines()
    header_json: list[str] = []
    i = 0
    while i < len(lines) and lines[i].startswith("#"):
        header_json.append(lines[i].lstrip("#").strip())
        i += 1
    if not header_json:
        raise SchemaError("trace file has no metadata header")
    try:
        meta = json.loads("".join(header_json))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"trace metadata is not valid JSON: {exc}") from exc
    if meta.get("schema") != TRACE_SCHEMA:
        raise SchemaError(
            f"unsupported trace schema {meta.get('schema')!r}; expected {TRACE_SCHEMA!r}"
        )
    if i >= len(lines) or not lines[i].startswith("t,"):
        raise SchemaError("trace file is missing the column header row")
    num_cols = len(lines[i].split(","))
    i += 1
    times = []
    rows = []
    for line in lines[i:]:
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != num_cols:
            raise SchemaError(f"row has {len(parts)} columns, expected {num_cols}")
        times.append(float(parts[0]))
        rows.append([float(x) for x in parts[1:]])
    if not times:
        raise SchemaError("trace file has no data rows")
    return ProbabilityTrace(np.asarray(times), np.asarray(rows), meta)


def load_trace(source) -> ProbabilityTrace:
    """Read a trace written by `persist_trace`."""
    return trace_from_csv(Path(source).read_text(encoding="utf-8"))
