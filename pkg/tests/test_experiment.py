from pathlib import Path

import numpy as np
import pytest

from kgsim.errors import ConfigError, SchemaError
from kgsim.evolution import Component, EvolutionParams, LatticeConfig, PotentialProfile, evolve
from kgsim.experiment import (
    ProbabilityTrace,
    expected_position,
    load_trace,
    persist_trace,
    run_time_sweep,
    trace_from_csv,
    trace_to_csv,
    transmission_fraction,
)
from kgsim.state import basis_state, site_probabilities

GOLDEN = Path(__file__).parent / "golden"


def barrier_lattice(preset="explicit"):
    if preset == "explicit":
        return LatticeConfig(2, PotentialProfile.explicit([0.0, 11.0, 0.0, 0.0]))
    return LatticeConfig(2, PotentialProfile.sigma_z_barrier(2, 11.0))


class TestRunTimeSweep:
    def test_time_zero_row_is_initial(self):
        trace = run_time_sweep(barrier_lattice(), Component.PARTICLE, [0.0], 10)
        np.testing.assert_array_equal(trace.rows[0], [1, 0, 0, 0])

    def test_rows_align_and_normalize(self):
        trace = run_time_sweep(barrier_lattice(), Component.PARTICLE, range(1, 11), 10)
        assert trace.rows.shape == (10, 4)
        np.testing.assert_allclose(trace.rows.sum(axis=1), 1.0, atol=1e-10)

    def test_rows_match_single_evolve(self):
        lattice = barrier_lattice()
        trace = run_time_sweep(lattice, Component.PARTICLE, [2.0, 5.0], 10)
        for t, row in zip(trace.times, trace.rows):
            state = evolve(
                basis_state(2, 0), Component.PARTICLE, EvolutionParams(float(t), 10), lattice
            )
            np.testing.assert_array_equal(row, site_probabilities(state))

    def test_empty_times_rejected(self):
        with pytest.raises(ValueError):
            run_time_sweep(barrier_lattice(), Component.PARTICLE, [], 10)

    def test_non_increasing_times_rejected(self):
        with pytest.raises(ValueError):
            run_time_sweep(barrier_lattice(), Component.PARTICLE, [1.0, 1.0], 10)

    def test_metadata_snapshot(self):
        trace = run_time_sweep(
            barrier_lattice("sigma-z"), Component.ANTIPARTICLE, [1.0], 8, "strang"
        )
        meta = trace.metadata
        assert meta["component"] == "antiparticle"
        assert meta["trotter_steps"] == 8
        assert meta["splitting"] == "strang"
        assert meta["potential_preset"] == "sigma-z-barrier"

    def test_cumulative_first_row_is_initial(self):
        trace = run_time_sweep(
            barrier_lattice(),
            Component.ANTIPARTICLE,
            range(-4, 5),
            8,
            initial_site=1,
            mode="cumulative",
        )
        np.testing.assert_array_equal(trace.rows[0], [0, 1, 0, 0])

    def test_cumulative_matches_manual_stepping(self):
        lattice = barrier_lattice()
        trace = run_time_sweep(
            lattice, Component.PARTICLE, [0.0, 1.0, 2.0], 2, mode="cumulative"
        )
        state = basis_state(2, 0)
        state = evolve(state, Component.PARTICLE, EvolutionParams(1.0, 1), lattice)
        np.testing.assert_array_equal(trace.rows[1], site_probabilities(state))
        state = evolve(state, Component.PARTICLE, EvolutionParams(1.0, 1), lattice)
        np.testing.assert_array_equal(trace.rows[2], site_probabilities(state))

    def test_cumulative_requires_aligned_grid(self):
        with pytest.raises(ConfigError):
            run_time_sweep(
                barrier_lattice(), Component.PARTICLE, [0.0, 0.4, 2.0], 2, mode="cumulative"
            )

    def test_negative_times_allowed(self):
        trace = run_time_sweep(barrier_lattice(), Component.PARTICLE, [-2.0, -1.0, 3.0], 5)
        assert trace.times[0] == -2.0


class TestObservables:
    def test_expected_position_basis(self):
        assert expected_position([1, 0, 0, 0]) == 0.0

    def test_expected_position_superposition(self):
        assert expected_position([0.5, 0, 0.5, 0]) == 1.0

    def test_expected_position_uniform(self):
        assert expected_position([0.25] * 4) == 1.5

    def test_expected_position_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            expected_position([0.5, 0.1, 0.0, 0.0])

    def test_transmission_basis(self):
        assert transmission_fraction([1, 0, 0, 0], 1) == 0.0
        assert transmission_fraction([0, 0, 1, 0], 1) == 1.0

    def test_transmission_midpoint(self):
        assert transmission_fraction([0.5, 0, 0.5, 0], 1) == 0.5

    def test_transmission_index_check(self):
        with pytest.raises(ValueError):
            transmission_fraction([1, 0, 0, 0], 4)


class TestTraceType:
    def test_row_count_must_match(self):
        with pytest.raises(ValueError):
            ProbabilityTrace(np.array([0.0, 1.0]), np.ones((3, 4)))

    def test_times_strictly_increasing(self):
        with pytest.raises(ValueError):
            ProbabilityTrace(np.array([1.0, 0.0]), np.ones((2, 4)))

    def test_row_at(self):
        trace = ProbabilityTrace(np.array([0.0, 1.0]), np.array([[1, 0], [0, 1.0]]))
        np.testing.assert_array_equal(trace.row_at(1.0), [0, 1])
        with pytest.raises(KeyError):
            trace.row_at(0.5)


class TestPersistence:
    def test_round_trip_exact(self, tmp_path):
        trace = run_time_sweep(barrier_lattice(), Component.PARTICLE, range(1, 6), 10)
        path = tmp_path / "trace.csv"
        persist_trace(trace, path)
        loaded = load_trace(path)
        np.testing.assert_array_equal(loaded.times, trace.times)
        np.testing.assert_array_equal(loaded.rows, trace.rows)
        assert loaded.metadata == {**trace.metadata, "schema": "kgsim-trace/1"}

    def test_round_trip_text_identity(self, tmp_path):
        trace = run_time_sweep(barrier_lattice(), Component.PARTICLE, [1.0, 2.0], 7)
        text = trace_to_csv(trace)
        assert trace_to_csv(trace_from_csv(text)) == text

    def test_golden_two_row(self):
        trace = ProbabilityTrace(
            np.array([0.0, 1.0]),
            np.array([[1.0, 0.0, 0.0, 0.0], [0.5, 0.0, 0.5, 0.0]]),
            {"schema": "kgsim-trace/1", "label": "golden-2row", "num_qubits": 2},
        )
        assert trace_to_csv(trace) == (GOLDEN / "trace_2row.csv").read_text()

    def test_missing_header_is_schema_error(self):
        with pytest.raises(SchemaError):
            trace_from_csv("t,p0,p1\n0,1,0\n")

    def test_wrong_schema_rejected(self):
        with pytest.raises(SchemaError):
            trace_from_csv('# {"schema":"kgsim-trace/999"}\nt,p0\n0,1\n')

    def test_malformed_json_rejected(self):
        with pytest.raises(SchemaError):
            trace_from_csv("# not json\nt,p0\n0,1\n")

    def test_ragged_row_rejected(self):
        with pytest.raises(SchemaError):
            trace_from_csv('# {"schema":"kgsim-trace/1"}\nt,p0,p1\n0,1\n')

    def test_determinism_byte_identical(self):
        a = run_time_sweep(barrier_lattice(), Component.PARTICLE, range(1, 8), 9)
        b = run_time_sweep(barrier_lattice(), Component.PARTICLE, range(1, 8), 9)
        assert trace_to_csv(a) == trace_to_csv(b)

    def test_random_trace_round_trips(self):
        rng = np.random.default_rng(3)
        for _ in range(10):
            num_times = int(rng.integers(1, 6))
            times = np.sort(rng.uniform(-10, 10, num_times))
            while np.any(np.diff(times) <= 0):
                times = np.sort(rng.uniform(-10, 10, num_times))
            raw = rng.uniform(0, 1, (num_times, 4))
            rows = raw / raw.sum(axis=1, keepdims=True)
            trace = ProbabilityTrace(times, rows, {"schema": "kgsim-trace/1"})
            text = trace_to_csv(trace)
            loaded = trace_from_csv(text)
            np.testing.assert_array_equal(loaded.times, trace.times)
            np.testing.assert_array_equal(loaded.rows, trace.rows)
