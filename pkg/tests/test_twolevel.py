"""Tests for two-level rotations, per-cycle propagators and Bloch trajectories."""

import math

import numpy as np
import pytest

from sfqdrive.core.errors import DomainError
from sfqdrive.params import PRESET_I
from sfqdrive.pulsetrain import DualCycle, DualPulseSchedule, PulseEvent, PulseTrain, dual_sequence
from sfqdrive.twolevel import (
    NORTH,
    BlochPoint,
    cycle_unitary_approx,
    cycle_unitary_closed_form,
    cycle_unitary_exact,
    effective_delta_theta,
    evolve_bloch,
    projective_distance,
    projectively_equal,
    rotation_x,
    rotation_xy,
    rotation_y,
    rotation_z,
    train_propagator,
    trajectory_to_csv,
    zyz_angles,
)

I2 = np.eye(2)


class TestRotations:
    def test_zero_angle(self):
        np.testing.assert_allclose(rotation_z(0.0), I2)
        np.testing.assert_allclose(rotation_y(0.0), I2)

    def test_full_turn_is_minus_identity(self):
        np.testing.assert_allclose(rotation_z(2 * math.pi), -I2, atol=1e-15)

    def test_y_pi_squared(self):
        np.testing.assert_allclose(rotation_y(math.pi) @ rotation_y(math.pi), -I2, atol=1e-15)

    def test_axis_phase(self):
        np.testing.assert_allclose(rotation_xy(0.7, 0.0), rotation_y(0.7), atol=1e-15)
        np.testing.assert_allclose(rotation_xy(0.7, -math.pi / 2), rotation_x(0.7), atol=1e-15)
        np.testing.assert_allclose(rotation_xy(0.7, math.pi), rotation_y(-0.7), atol=1e-15)

    def test_conjugation_moves_axis(self):
        a = 0.4
        moved = rotation_z(a) @ rotation_y(0.9) @ rotation_z(-a)
        np.testing.assert_allclose(moved, rotation_xy(0.9, a), atol=1e-14)

    def test_projective_helpers(self):
        assert projectively_equal(-I2, I2)
        assert not projectively_equal(rotation_y(0.1), I2)
        assert projective_distance(rotation_x(math.pi), rotation_y(math.pi)) == pytest.approx(1.0)


class TestCycleUnitary:
    def test_closed_form_random(self):
        rng = np.random.default_rng(7)
        for dtheta, phi in rng.uniform(-2 * math.pi, 2 * math.pi, size=(10_000, 2)):
            diff = cycle_unitary_exact(dtheta, phi) - cycle_unitary_closed_form(dtheta, phi)
            assert np.max(np.abs(diff)) <= 1e-12

    def test_zero_kick(self):
        np.testing.assert_allclose(cycle_unitary_exact(0.0, 0.8), -I2, atol=1e-15)

    def test_half_pi_is_minus_identity(self):
        np.testing.assert_allclose(cycle_unitary_exact(0.3, math.pi / 2), -I2, atol=1e-15)

    def test_reference_entries(self):
        dtheta, phi = math.pi / 30, math.pi / 4
        u = cycle_unitary_exact(dtheta, phi)
        c2, s2 = math.cos(dtheta / 2) ** 2, math.sin(dtheta / 2) ** 2
        assert u[0, 1] == pytest.approx(math.cos(phi) * math.sin(dtheta), abs=1e-15)
        assert u[1, 0] == pytest.approx(-math.cos(phi) * math.sin(dtheta), abs=1e-15)
        assert u[0, 0] == pytest.approx(-c2 - s2 * np.exp(-1j * (2 * phi - math.pi)), abs=1e-15)

    def test_composition_law(self):
        u = np.eye(2, dtype=complex)
        for n in range(1, 8):
            u = cycle_unitary_exact(math.pi / 30, math.pi / 2) @ u
            np.testing.assert_allclose(u, (-1) ** n * I2, atol=1e-14)

    def test_unitary(self):
        u = cycle_unitary_exact(0.2, 1.1)
        np.testing.assert_allclose(u.conj().T @ u, I2, atol=1e-12)
        assert abs(np.linalg.det(u)) == pytest.approx(1.0, abs=1e-12)

    def test_approx_values(self):
        np.testing.assert_allclose(cycle_unitary_approx(0.0, 1.0), -I2)
        np.testing.assert_allclose(
            cycle_unitary_approx(math.pi / 30, math.pi / 3), -rotation_y(math.pi / 30), atol=1e-15
        )

    def test_approx_second_order(self):
        grid = np.linspace(0.05, math.pi - 0.05, 41)

        def worst(dtheta):
            return max(
                np.linalg.norm(cycle_unitary_exact(dtheta, p) - cycle_unitary_approx(dtheta, p), 2)
                for p in grid
            )

        coarse, fine = worst(math.pi / 30), worst(math.pi / 60)
        assert 3.5 < coarse / fine < 4.5
        assert coarse <= (math.pi / 30) ** 2


class TestZYZAngles:
    @pytest.mark.parametrize("a, beta, b", [(0.3, 1.1, -0.7), (-2.0, 0.4, 1.5), (0.0, 2.9, 0.2)])
    def test_reconstructs(self, a, beta, b):
        u = rotation_z(a) @ rotation_y(beta) @ rotation_z(b)
        a2, beta2, b2 = zyz_angles(np.exp(0.4j) * u)
        assert beta2 == pytest.approx(beta, abs=1e-12)
        rebuilt = rotation_z(a2) @ rotation_y(beta2) @ rotation_z(b2)
        assert projectively_equal(rebuilt, u, atol=1e-12)

    def test_leaky_block_uses_nearest_unitary(self):
        u = rotation_z(0.2) @ rotation_y(math.pi / 2) @ rotation_z(-0.5)
        a, beta, b = zyz_angles(0.97 * u)
        assert (a, beta, b) == pytest.approx((0.2, math.pi / 2, -0.5), abs=1e-12)


class TestEffectiveDeltaTheta:
    def test_values(self):
        assert effective_delta_theta(0.1, math.pi / 2) == pytest.approx(0.0, abs=1e-16)
        assert effective_delta_theta(math.pi / 30, math.pi / 3) == pytest.approx(math.pi / 30)

    def test_hardware_maximum(self):
        ratio = effective_delta_theta(1.0, 0.0423 * math.pi)
        assert ratio == pytest.approx(1.982, abs=1e-3)


class TestTrainPropagator:
    def test_single_pulse(self):
        train = PulseTrain(events=(PulseEvent(0.0),), clock_period=PRESET_I.period)
        u = train_propagator(train, PRESET_I.omega01, PRESET_I.delta_theta)
        np.testing.assert_allclose(u, rotation_y(PRESET_I.delta_theta), atol=1e-15)

    def test_dual_pair_effective_rotation(self):
        phi = math.pi / 3
        _, train = dual_sequence(1, phi, 0.0, PRESET_I)
        u = train_propagator(train, PRESET_I.omega01, PRESET_I.delta_theta)
        target = rotation_y(effective_delta_theta(PRESET_I.delta_theta, phi))
        assert projective_distance(u, target) < 1e-3

    def test_quarter_period_gives_x(self):
        _, train = dual_sequence(1, math.pi / 3, -math.pi / 2 + 2 * math.pi, PRESET_I)
        u = train_propagator(train, PRESET_I.omega01, PRESET_I.delta_theta)
        assert projective_distance(u, rotation_x(PRESET_I.delta_theta)) < 1e-3


class TestBloch:
    def test_point_bounds(self):
        with pytest.raises(DomainError):
            BlochPoint(1.0, 1.0, 0.0)

    def test_state_round_trip(self):
        p = BlochPoint(0.6, 0.0, 0.8)
        q = BlochPoint.from_state(p.to_state())
        assert (q.x, q.y, q.z) == pytest.approx((0.6, 0.0, 0.8))

    def test_empty_schedule(self):
        schedule = DualPulseSchedule(cycles=(), params=PRESET_I)
        points = evolve_bloch(schedule, NORTH)
        assert len(points) == 1
        assert points[0].z == pytest.approx(1.0)

    def test_half_pi_cycle_returns(self):
        schedule, _ = dual_sequence(1, math.pi / 2, 0.0, PRESET_I)
        end = evolve_bloch(schedule, NORTH, substeps=8)[-1]
        assert end.z == pytest.approx(1.0, abs=1e-10)

    def test_endpoint_matches_cycle_product(self):
        phis = [0.4, 1.2, 2.0, 0.9]
        schedule = DualPulseSchedule(
            cycles=tuple(DualCycle(k, p) for k, p in enumerate(phis)), params=PRESET_I
        )
        end = evolve_bloch(schedule, BlochPoint(0.0, 0.0, 1.0))[-1]
        state = np.array([1.0, 0.0], dtype=complex)
        for p in phis:
            state = cycle_unitary_exact(PRESET_I.delta_theta, p) @ state
        ref = BlochPoint.from_state(state)
        assert (end.x, end.y, end.z) == pytest.approx((ref.x, ref.y, ref.z), abs=1e-10)

    def test_quarter_turn_lands_on_plus_x(self):
        schedule, _ = dual_sequence(15, math.pi / 3, 0.0, PRESET_I)
        end = evolve_bloch(schedule, NORTH, substeps=2)[-1]
        assert end.x == pytest.approx(1.0, abs=3e-3)
        assert end.z == pytest.approx(0.0, abs=3e-3)

    def test_sense_matches_train_propagator(self):
        schedule, train = dual_sequence(12, 1.1, 0.0, PRESET_I)
        end = evolve_bloch(schedule, NORTH, substeps=2)[-1]
        u = train_propagator(train, PRESET_I.omega01, PRESET_I.delta_theta)
        ref = BlochPoint.from_state(u @ np.array([1.0, 0.0], dtype=complex))
        assert (end.x, end.y, end.z) == pytest.approx((ref.x, ref.y, ref.z), abs=1e-9)

    def test_pi_rotation_flips(self):
        schedule, _ = dual_sequence(30, math.pi / 3, 0.0, PRESET_I)
        points = evolve_bloch(schedule, NORTH, substeps=2)
        state = np.array([1.0, 0.0], dtype=complex)
        for _ in range(30):
            state = cycle_unitary_exact(PRESET_I.delta_theta, math.pi / 3) @ state
        ref = BlochPoint.from_state(state)
        end = points[-1]
        assert (end.x, end.y, end.z) == pytest.approx((ref.x, ref.y, ref.z), abs=1e-10)
        assert end.z == pytest.approx(-1.0, abs=1e-2)
        assert all(abs(p.norm - 1.0) <= 1e-10 for p in points)

    def test_csv(self, tmp_path):
        schedule, _ = dual_sequence(1, math.pi / 2, 0.0, PRESET_I)
        points = evolve_bloch(schedule, NORTH, substeps=4)
        lines = trajectory_to_csv(points, tmp_path / "traj.csv").read_text().splitlines()
        assert lines[0] == "t_s,x,y,z"
        assert len(lines) == len(points) + 1
