"""Command-line front end.

Subcommands: `sweep` (trace CSV + SVG heatmap + manifest), `qasm` (synthesized
evolution circuit as OpenQASM on stdout), `oracle-compare` (Trotter error vs
the dense oracle for a list of step counts), and `version`.

Exit codes: 0 success, 2 configuration error, 3 I/O failure, 4 numeric
failure. The run manifest is written last, so its presence marks a completed
run. `--config` takes a path, or the bare name of a bundled configuration
(`case_a`, `case_b`).
"""

from __future__ import annotations

import argparse
import importlib.resources
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .circuits import synthesize_circuit, to_openqasm
from .errors import ConfigError, NumericsError
from .evolution import (
    CONVENTIONS,
    EXPLICIT_SITES,
    SIGMA_Z_BARRIER,
    SPLITTINGS,
    Component,
    EvolutionParams,
    LatticeConfig,
    PotentialProfile,
    UnitSystem,
    evolve,
    exact_component_oracle,
    trotter_step_circuit,
)
from .experiment import SWEEP_MODES, persist_trace, run_time_sweep
from .heatmap import render_heatmap_svg
from .state import Circuit, StateVector, basis_state, from_amplitudes

MANIFEST_SCHEMA = "kgsim-manifest/1"
OUT_DIR_ENV = "KGSIM_OUT_DIR"


@dataclass
class RunConfig:
    """A fully resolved run configuration (file contents plus defaults)."""

    label: str
    num_qubits: int
    mass: float
    component: Component
    potential: PotentialProfile
    barrier_site: int
    initial_site: int
    initial_amplitudes: list | None
    times: list[float]
    trotter_steps: int
    splitting: str
    convention: str
    kinetic_applications: int
    include_rest_energy: bool
    sweep_mode: str
    seed: int | None

    def lattice(self) -> LatticeConfig:
        return LatticeConfig(
            self.num_qubits,
            self.potential,
            units=UnitSystem(mass=self.mass),
            convention=self.convention,
            kinetic_applications=self.kinetic_applications,
            include_rest_energy=self.include_rest_energy,
        )

    def initial_state(self) -> StateVector:
        if self.initial_amplitudes is not None:
            amps = [complex(re, im) for re, im in self.initial_amplitudes]
            state = from_amplitudes(amps)
            if state.num_qubits != self.num_qubits:
                raise ConfigError("initial amplitude list does not match the qubit count")
            return state
        return basis_state(self.num_qubits, self.initial_site)

    def resolved(self) -> dict:
        return {
            "label": self.label,
            "num_qubits": self.num_qubits,
            "mass": self.mass,
            "component": self.component.value,
            "potential": {
                "preset": self.potential.preset,
                "site_values": list(self.potential.site_values),
                "v0": self.potential.v0,
            },
            "barrier_site": self.barrier_site,
            "initial_site": self.initial_site,
            "initial_amplitudes": self.initial_amplitudes,
            "times": list(self.times),
            "trotter_steps": self.trotter_steps,
            "splitting": self.splitting,
            "convention": self.convention,
            "kinetic_applications": self.kinetic_applications,
            "include_rest_energy": self.include_rest_energy,
            "sweep_mode": self.sweep_mode,
            "seed": self.seed,
        }


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise ConfigError(message)


def parse_config(data: dict) -> RunConfig:
    """Validate a raw config dict; every problem raises ConfigError."""
    _expect(isinstance(data, dict), "config must be a JSON object")
    try:
        num_qubits = int(data["num_qubits"])
    except KeyError:
        raise ConfigError("config is missing 'num_qubits'") from None
    _expect(1 <= num_qubits <= 12, f"num_qubits must be in [1, 12], got {num_qubits}")
    size = 1 << num_qubits

    mass = float(data.get("mass", 0.5))
    _expect(mass > 0, "mass must be positive")

    comp_name = str(data.get("component", "particle")).lower()
    try:
        component = Component(comp_name)
    except ValueError:
        raise ConfigError(f"unknown component {comp_name!r}") from None

    pot_data = data.get("potential", {"preset": EXPLICIT_SITES, "site_values": [0.0] * size})
    _expect(isinstance(pot_data, dict), "'potential' must be an object")
    preset = pot_data.get("preset", EXPLICIT_SITES)
    if preset == SIGMA_Z_BARRIER:
        potential = PotentialProfile.sigma_z_barrier(num_qubits, float(pot_data.get("v0", 11.0)))
    elif preset == EXPLICIT_SITES:
        values = pot_data.get("site_values")
        _expect(isinstance(values, list), "'potential.site_values' must be a list")
        _expect(len(values) == size, f"'potential.site_values' needs {size} entries")
        potential = PotentialProfile.explicit([float(v) for v in values])
    else:
        raise ConfigError(f"unknown potential preset {preset!r}")

    barrier_site = int(data.get("barrier_site", 0))
    _expect(0 <= barrier_site < size, f"barrier_site must be in [0, {size})")

    initial_site = int(data.get("initial_site", 0))
    _expect(0 <= initial_site < size, f"initial_site must be in [0, {size})")
    initial_amplitudes = data.get("initial_amplitudes")
    if initial_amplitudes is not None:
        _expect(
            isinstance(initial_amplitudes, list) and len(initial_amplitudes) == size,
            f"'initial_amplitudes' needs {size} [re, im] pairs",
        )

    times = data.get("times", [])
    _expect(isinstance(times, list) and len(times) > 0, "'times' must be a non-empty list")
    times = [float(t) for t in times]
    _expect(all(b > a for a, b in zip(times, times[1:])), "'times' must be strictly increasing")

    trotter_steps = int(data.get("trotter_steps", 10))
    _expect(trotter_steps >= 1, "trotter_steps must be >= 1")

    splitting = str(data.get("splitting", "first-order"))
    _expect(splitting in SPLITTINGS, f"splitting must be one of {SPLITTINGS}")
    convention = str(data.get("convention", "mirrored"))
    _expect(convention in CONVENTIONS, f"convention must be one of {CONVENTIONS}")
    kinetic_applications = int(data.get("kinetic_applications", 2))
    _expect(kinetic_applications in (1, 2), "kinetic_applications must be 1 or 2")
    include_rest_energy = bool(data.get("include_rest_energy", True))
    sweep_mode = str(data.get("sweep_mode", "independent"))
    _expect(sweep_mode in SWEEP_MODES, f"sweep_mode must be one of {SWEEP_MODES}")
    seed = data.get("seed")
    if seed is not None:
        seed = int(seed)

    return RunConfig(
        label=str(data.get("label", "")),
        num_qubits=num_qubits,
        mass=mass,
        component=component,
        potential=potential,
        barrier_site=barrier_site,
        initial_site=initial_site,
        initial_amplitudes=initial_amplitudes,
        times=times,
        trotter_steps=trotter_steps,
        splitting=splitting,
        convention=convention,
        kinetic_applications=kinetic_applications,
        include_rest_energy=include_rest_energy,
        sweep_mode=sweep_mode,
        seed=seed,
    )


def load_config(spec: str) -> RunConfig:
    """Load a config from a path or from the bundled configuration set."""
    path = Path(spec)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
    else:
        name = spec.removesuffix(".json")
        resource = importlib.resources.files("kgsim") / "configs" / f"{name}.json"
        if not resource.is_file():
            raise ConfigError(f"config not found: {spec}")
        text = resource.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    return parse_config(data)


def evolution_circuit(config: RunConfig, t: float, r: int) -> Circuit:
    """The fully synthesized r-step evolution circuit for time t."""
    lattice = config.lattice()
    params = EvolutionParams(t, r, config.splitting)
    step = trotter_step_circuit(lattice, config.component, params.dt, params.splitting)
    gates = step.gates * r
    return synthesize_circuit(Circuit(config.num_qubits, gates, label=f"evolve[t={t},r={r}]"))


def cmd_sweep(config: RunConfig, out_dir: Path) -> int:
    started = time.monotonic()
    trace = run_time_sweep(
        config.lattice(),
        config.component,
        config.times,
        config.trotter_steps,
        config.splitting,
        initial=config.initial_state(),
        mode=config.sweep_mode,
        metadata={"config": config.resolved()},
    )
    out_dir.mkdir(parents=True, exist_ok=True)
    trace_path = out_dir / "trace.csv"
    heatmap_path = out_dir / "heatmap.svg"
    persist_trace(trace, trace_path)
    heatmap_path.write_text(render_heatmap_svg(trace, title=config.label), encoding="utf-8")
    manifest = {
        "schema": MANIFEST_SCHEMA,
        "command": "sweep",
        "config": config.resolved(),
        "outputs": [trace_path.name, heatmap_path.name],
        "tool_version": __version__,
        "duration_s": round(time.monotonic() - started, 6),
    }
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    print(f"wrote {trace_path}, {heatmap_path}, {out_dir / 'manifest.json'}")
    return 0


def cmd_qasm(config: RunConfig, component: str | None, t: float, r: int) -> int:
    if component is not None:
        config.component = Component(component)
    _expect(r >= 1, "r must be >= 1")
    circuit = evolution_circuit(config, t, r)
    sys.stdout.write(to_openqasm(circuit))
    return 0


def cmd_oracle_compare(config: RunConfig, r_values: list[int], t: float, out: Path | None) -> int:
    _expect(len(r_values) > 0, "need at least one r value")
    _expect(all(r >= 1 for r in r_values), "all r values must be >= 1")
    lattice = config.lattice()
    oracle = exact_component_oracle(lattice, config.component)
    initial = config.initial_state()
    exact = oracle.evolve(initial, t).amplitudes
    lines = ["r,error"]
    for r in r_values:
        params = EvolutionParams(t, r, config.splitting)
        approx = evolve(initial, config.component, params, lattice).amplitudes
        err = float(np.linalg.norm(approx - exact))
        lines.append(f"{r},{err:.17g}")
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        print(f"wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kgsim", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser("sweep", help="run a time sweep: trace CSV, SVG heatmap, manifest")
    p_sweep.add_argument("--config", required=True, help="config path or bundled name")
    p_sweep.add_argument("--out", help=f"output directory (default ${OUT_DIR_ENV} or ./out)")

    p_qasm = sub.add_parser("qasm", help="print the synthesized evolution circuit as OpenQASM 2.0")
    p_qasm.add_argument("--config", required=True)
    p_qasm.add_argument("--component", choices=[c.value for c in Component])
    p_qasm.add_argument("--t", type=float, required=True, help="total evolution time")
    p_qasm.add_argument("--r", type=int, required=True, help="number of Trotter steps")

    p_cmp = sub.add_parser("oracle-compare", help="Trotter state error vs the dense oracle")
    p_cmp.add_argument("--config", required=True)
    p_cmp.add_argument("--r", required=True, help="comma-separated step counts, e.g. 5,10,20,40")
    p_cmp.add_argument("--t", type=float, default=1.0, help="comparison time (default 1)")
    p_cmp.add_argument("--out", help="write the CSV report here instead of stdout")

    sub.add_parser("version", help="print the tool version")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "version":
            print(f"kgsim {__version__}")
            return 0
        config = load_config(args.config)
        if args.command == "sweep":
            out_dir = Path(args.out or os.environ.get(OUT_DIR_ENV) or "out")
            return cmd_sweep(config, out_dir)
        if args.command == "qasm":
            return cmd_qasm(config, args.component, args.t, args.r)
        if args.command == "oracle-compare":
            try:
                r_values = [int(x) for x in args.r.split(",") if x.strip()]
            except ValueError:
                raise ConfigError(f"could not parse r list {args.r!r}") from None
            out = Path(args.out) if args.out else None
            return cmd_oracle_compare(config, r_values, args.t, out)
        raise ConfigError(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except NumericsError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
