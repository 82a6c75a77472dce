"""Tests for the Clifford table, gate calibration and the compiler."""

import math

import numpy as np
import pytest

from sfqdrive.core.errors import CalibrationError, CompileError, ConfigError, DomainError
from sfqdrive.gates import (
    PHYSICAL,
    PRIMITIVES,
    CalibratedGate,
    CalibrationStore,
    Frame,
    Scheme,
    average_length,
    calibrate_all,
    calibrate_coarse,
    calibrate_fine,
    calibrate_single,
    clifford_table,
    compile_clifford,
    compile_primitives,
    compile_sequence,
    evaluate_gate,
    find_element,
    recovery_clifford,
    sequence_unitary,
    simulate_gate,
    suggest_cycle_count,
)
from sfqdrive.gates.store import DEFAULT_CYCLE_SPAN
from sfqdrive.params import PHI_MIN, PRESET_I, PRESET_II
from sfqdrive.pulsetrain import dual_sequence, min_cycles, uniform_phi
from sfqdrive.spectrum import leakage_ratio
from sfqdrive.transmon import TWO_LEVEL, gate_fidelity, gate_propagator
from sfqdrive.twolevel import projectively_equal, rotation_xy, rotation_z

T = PRESET_I.period
FINE_PARAMS = PRESET_I.replace(delta_theta=math.pi / 120)


@pytest.fixture(scope="module")
def coarse_store():
    return calibrate_all(FINE_PARAMS, mode="dual-coarse", n_cycles=100)


@pytest.fixture(scope="module")
def fine_y180():
    coarse = calibrate_coarse(math.pi, 30, PRESET_I, name="Y180")
    return coarse, calibrate_fine(coarse, PRESET_I)


class TestPrimitives:
    def test_physical_names(self):
        assert set(PHYSICAL) == {"X90", "X180", "mX90", "Y90", "Y180", "mY90"}

    def test_axes(self):
        x = np.array([[0, 1], [1, 0]], dtype=complex)
        y = np.array([[0, -1j], [1j, 0]])
        assert projectively_equal(PRIMITIVES["X180"].unitary, x)
        assert projectively_equal(PRIMITIVES["Y180"].unitary, y)

    def test_inverse_pairs(self):
        for a, b in (("X90", "mX90"), ("Y90", "mY90"), ("Z90", "mZ90")):
            product = PRIMITIVES[b].unitary @ PRIMITIVES[a].unitary
            assert projectively_equal(product, np.eye(2))


class TestCliffordTable:
    def test_size_and_identity(self):
        table = clifford_table()
        assert len(table) == 24
        assert table[0].is_identity
        assert [e.index for e in table] == list(range(24))

    def test_distinct(self):
        table = clifford_table()
        for i, a in enumerate(table):
            for b in table[i + 1 :]:
                assert not projectively_equal(a.matrix, b.matrix)

    def test_closure(self):
        table = clifford_table()
        for a in table:
            for b in table:
                find_element(b.matrix @ a.matrix)

    def test_inverses(self):
        for element in clifford_table():
            inverse = find_element(element.matrix.conj().T)
            assert projectively_equal(inverse.matrix @ element.matrix, np.eye(2))

    def test_only_physical_primitives(self):
        for element in clifford_table():
            assert set(element.decomposition) <= set(PHYSICAL)
            assert len(element) <= 3

    def test_matrix_matches_decomposition(self):
        for element in clifford_table():
            np.testing.assert_allclose(element.matrix, sequence_unitary(element.decomposition))

    def test_average_length(self):
        assert average_length() == pytest.approx(44 / 24)

    def test_not_clifford(self):
        with pytest.raises(DomainError) as info:
            find_element(rotation_xy(0.3, 0.0))
        assert info.value.to_dict()["error"] == "DOMAIN"

    def test_recovery(self):
        rng = np.random.default_rng(7)
        table = clifford_table()
        for _ in range(20):
            seq = [table[i] for i in rng.integers(0, 24, size=20)]
            u = np.eye(2, dtype=complex)
            for element in seq:
                u = element.matrix @ u
            total = recovery_clifford(seq).matrix @ u
            assert projectively_equal(total, np.eye(2), atol=1e-10)


class TestCoarseCalibration:
    def test_pi_thirty_cycles(self):
        gate = calibrate_coarse(math.pi, 30, PRESET_I)
        assert gate.phi == pytest.approx(math.pi / 3, abs=1e-12)
        assert gate.scheme is Scheme.DUAL

    def test_pi_forty_cycles(self):
        gate = calibrate_coarse(math.pi, 40, PRESET_I)
        assert gate.phi == pytest.approx(math.acos(0.375), abs=1e-12)

    def test_infeasible_names_minimum(self):
        with pytest.raises(CalibrationError) as info:
            calibrate_coarse(math.pi, 14, PRESET_I, hardware_constrained=True)
        assert info.value.min_cycles == 16
        assert "16" in str(info.value)

    def test_boundary_count(self):
        n = min_cycles(math.pi, PRESET_I.delta_theta)
        calibrate_coarse(math.pi, n, PRESET_I)
        with pytest.raises(CalibrationError):
            calibrate_coarse(math.pi, n - 1, PRESET_I)

    def test_rotation_total(self):
        gate = calibrate_coarse(math.pi / 2, 25, PRESET_I)
        total = gate.n_cycles * 2 * math.cos(gate.phi) * PRESET_I.delta_theta
        assert total == pytest.approx(math.pi / 2, abs=1e-12)

    def test_dict_round_trip(self):
        gate = calibrate_coarse(math.pi, 30, PRESET_I, axis_phase=0.5, name="Y180")
        back = CalibratedGate.from_dict("Y180", gate.to_dict())
        assert back == gate

    def test_single_scheme(self):
        gate = calibrate_single(math.pi, PRESET_I)
        assert gate.n_cycles == 30
        assert math.isnan(gate.phi)
        assert len(gate.train(PRESET_I)) == 30
        assert evaluate_gate(gate, PRESET_I, TWO_LEVEL) == pytest.approx(1.0, abs=1e-10)

    def test_train_follows_axis(self):
        gate = calibrate_coarse(math.pi, 30, PRESET_I)
        _, expected = dual_sequence(30, gate.phi, 1.0, PRESET_I)
        np.testing.assert_allclose(gate.train(PRESET_I, 1.0).times, expected.times)


class TestFineCalibration:
    def test_not_worse_than_coarse(self, fine_y180):
        coarse, fine = fine_y180
        assert fine.fine_tuned
        assert fine.achieved_fidelity >= evaluate_gate(coarse, PRESET_I)
        assert fine.achieved_fidelity == pytest.approx(evaluate_gate(fine, PRESET_I), abs=1e-12)

    def test_window(self, fine_y180):
        coarse, fine = fine_y180
        assert abs(fine.phi - coarse.phi) <= 0.02 * coarse.phi + 1e-12

    def test_idempotent(self, fine_y180):
        _, fine = fine_y180
        again = calibrate_fine(fine, PRESET_I)
        assert again.phi == pytest.approx(fine.phi, abs=1e-6)

    def test_frame_corrections_recover_z_error(self, fine_y180):
        _, fine = fine_y180
        plain = gate_fidelity(simulate_gate(fine, PRESET_I), fine.target)
        assert fine.achieved_fidelity >= plain
        assert (fine.frame_pre, fine.frame_post) != (0.0, 0.0)

    def test_frame_corrections_independent_of_axis(self):
        y = calibrate_fine(calibrate_coarse(math.pi / 2, 30, PRESET_I, axis_phase=0.0), PRESET_I)
        x = calibrate_fine(
            calibrate_coarse(math.pi / 2, 30, PRESET_I, axis_phase=-math.pi / 2), PRESET_I
        )
        assert x.phi == pytest.approx(y.phi, abs=1e-6)
        assert math.remainder(x.frame_pre - y.frame_pre, 2 * math.pi) == pytest.approx(0, abs=1e-5)
        assert math.remainder(x.frame_post - y.frame_post, 2 * math.pi) == pytest.approx(0, abs=1e-5)

    def test_default_count_beats_single_pulse(self):
        n = suggest_cycle_count(PRESET_I, span=DEFAULT_CYCLE_SPAN)
        coarse = calibrate_coarse(math.pi / 2, n, PRESET_I, axis_phase=-math.pi / 2, name="X90")
        fine = calibrate_fine(coarse, PRESET_I)
        single = calibrate_single(math.pi / 2, PRESET_I, -math.pi / 2, "X90")
        assert fine.achieved_fidelity > evaluate_gate(single, PRESET_I)
        assert fine.achieved_fidelity >= evaluate_gate(coarse, PRESET_I)

    def test_weak_coupling(self):
        params = PRESET_I.replace(delta_theta=math.pi / 240)
        fine = calibrate_fine(calibrate_coarse(math.pi, 200, params), params)
        assert 1 - fine.achieved_fidelity < 1e-3

    def test_single_scheme_refused(self):
        with pytest.raises(CalibrationError):
            calibrate_fine(calibrate_single(math.pi, PRESET_I), PRESET_I)

    def test_window_clipped(self):
        n = 16
        angle = 2 * n * PRESET_I.delta_theta * math.cos(1.01 * PHI_MIN)
        coarse = calibrate_coarse(angle, n, PRESET_I, hardware_constrained=True)
        fine = calibrate_fine(coarse, PRESET_I)
        assert fine.phi > PHI_MIN
        assert any("clipped" in w for w in fine.warnings)

    def test_suggest_cycle_count(self):
        n_min = min_cycles(math.pi, PRESET_I.delta_theta)
        n = suggest_cycle_count(PRESET_I)
        assert n_min <= n <= 4 * n_min

        def ratio(count):
            _, train = dual_sequence(count, uniform_phi(count, math.pi, PRESET_I.delta_theta),
                                     0.0, PRESET_I)
            return leakage_ratio(train, PRESET_I)

        assert ratio(n) <= ratio(n_min)

    def test_suggest_cycle_count_span(self):
        assert suggest_cycle_count(PRESET_I, span=DEFAULT_CYCLE_SPAN) == 100
        assert suggest_cycle_count(PRESET_II, span=DEFAULT_CYCLE_SPAN) == 200
        with pytest.raises(DomainError):
            suggest_cycle_count(PRESET_I, span=(3, 2))


class TestStore:
    def test_modes(self):
        single = calibrate_all(PRESET_I, mode="single-pulse")
        assert not single.missing()
        assert all(g.scheme is Scheme.SINGLE for g in single)
        coarse = calibrate_all(PRESET_I, mode="dual-coarse")
        assert {g.n_cycles for g in coarse} == {100}
        assert all(g.frame_pre == g.frame_post == 0.0 for g in coarse)
        with pytest.raises(ConfigError):
            calibrate_all(PRESET_I, mode="square")

    def test_register_virtual(self):
        store = CalibrationStore()
        with pytest.raises(CalibrationError):
            store.register(calibrate_coarse(math.pi / 2, 20, PRESET_I, name="Z90"))

    def test_unregister(self, coarse_store):
        store = CalibrationStore(coarse_store.list_gates())
        assert store.unregister("X90")
        assert not store.unregister("X90")
        assert store.missing() == ["X90"]
        assert "X90" not in store

    def test_save_load(self, tmp_path):
        store = calibrate_all(PRESET_I, mode="single-pulse")
        path = store.save(tmp_path / "cal.json")
        loaded = CalibrationStore.load(path)
        again = loaded.save(tmp_path / "again.json")
        assert again.read_text() == path.read_text()
        assert math.isnan(loaded.get("Y180").phi)

    def test_fine_frames_saved(self, tmp_path):
        store = calibrate_all(PRESET_I, mode="dual-fine", n_cycles=30)
        loaded = CalibrationStore.load(store.save(tmp_path / "cal.json"))
        for gate in store:
            again = loaded.get(gate.name)
            assert (again.frame_pre, again.frame_post) == (gate.frame_pre, gate.frame_post)

    def test_load_errors(self, tmp_path):
        with pytest.raises(ConfigError):
            CalibrationStore.load(tmp_path / "absent.json")
        bad = tmp_path / "bad.json"
        bad.write_text('{"X90": {"n_cycles": 3}}')
        with pytest.raises(ConfigError):
            CalibrationStore.load(bad)


class TestCompiler:
    def test_identity_is_empty(self, coarse_store):
        train, frame = compile_clifford(clifford_table()[0], coarse_store, FINE_PARAMS)
        assert len(train) == 0
        assert frame.angle == 0.0

    def test_single_primitive(self, coarse_store):
        train, _ = compile_primitives(["Y180"], coarse_store, FINE_PARAMS)
        expected = coarse_store.get("Y180").train(FINE_PARAMS)
        np.testing.assert_array_equal(train.times, expected.times)
        assert train.cycles == 100

    def test_contiguous(self, coarse_store):
        train, _ = compile_primitives(["Y90", "X90"], coarse_store, FINE_PARAMS)
        assert np.all(np.diff(train.times) > 0)
        assert len(train) == 400

    def test_two_level_product(self, coarse_store):
        train, _ = compile_primitives(["X90", "Y90"], coarse_store, FINE_PARAMS)
        u = gate_propagator(train, FINE_PARAMS, start=0.0, stop=train.duration,
                            generator=TWO_LEVEL)
        target = sequence_unitary(["X90", "Y90"])
        assert 1 - gate_fidelity(u, target) < 1e-3

    def test_frame_shift(self, coarse_store):
        plain, _ = compile_primitives(["Y180"], coarse_store, FINE_PARAMS)
        turned, frame = compile_primitives(["Z90", "Y180"], coarse_store, FINE_PARAMS)
        assert frame.angle == pytest.approx(1.5 * math.pi)
        np.testing.assert_allclose(turned.times - plain.times, 0.75 * T, rtol=0, atol=1e-18)

    def test_fine_frames_compile_exactly(self):
        store = calibrate_all(PRESET_I, mode="dual-fine", n_cycles=16, generator=TWO_LEVEL)
        names = ["X90", "Y90", "Z90", "mX90", "mY90", "Y90"]
        train, frame = compile_primitives(names, store, PRESET_I)
        u = gate_propagator(train, PRESET_I, start=0.0, stop=train.duration, generator=TWO_LEVEL)
        physical = rotation_z(-frame.angle) @ u[:2, :2]
        assert projectively_equal(physical, sequence_unitary(names), atol=1e-8)

    def test_frame_identity(self):
        frame = Frame().turned(math.pi / 2)
        physical = rotation_xy(math.pi, frame.angle)
        ideal = sequence_unitary(["Z90", "Y180"])
        assert projectively_equal(rotation_z(-frame.angle) @ physical, ideal)

    def test_frame_wraps(self):
        assert Frame(-0.5).angle == pytest.approx(2 * math.pi - 0.5)
        assert Frame().turned(-2 * math.pi).angle == pytest.approx(0.0)

    def test_sequence(self, coarse_store):
        table = clifford_table()
        seq = [table[3], table[20]]
        names = [n for e in seq for n in e.decomposition]
        a, fa = compile_sequence(seq, coarse_store, FINE_PARAMS)
        b, fb = compile_primitives(names, coarse_store, FINE_PARAMS)
        np.testing.assert_array_equal(a.times, b.times)
        assert fa == fb

    def test_missing_calibration(self):
        with pytest.raises(CompileError):
            compile_primitives(["X90"], CalibrationStore(), PRESET_I)

    def test_unknown_primitive(self, coarse_store):
        with pytest.raises(CompileError):
            compile_primitives(["H"], coarse_store, FINE_PARAMS)
