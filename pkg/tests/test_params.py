"""Tests for physical parameters and run configuration."""

import json
import math

import pytest

from sfqdrive.core.errors import ConfigError, DomainError
from sfqdrive.params import (
    DEFAULT_CONSTANTS,
    PRESET_I,
    PRESET_II,
    CouplingSpec,
    CouplingWarning,
    QubitParams,
    delta_theta_from_circuit,
    ensure_valid,
    load_config,
    validate,
)


class TestConstants:
    def test_flux_quantum(self):
        assert DEFAULT_CONSTANTS.phi0 == pytest.approx(2.067833848e-15, rel=1e-6)

    def test_hbar(self):
        assert DEFAULT_CONSTANTS.hbar == pytest.approx(1.054571817e-34, rel=1e-6)


class TestQubitParams:
    def test_preset_i(self):
        assert validate(PRESET_I) == []
        assert PRESET_I.omega01 == pytest.approx(2 * math.pi * 5e9)
        assert PRESET_I.delta_theta == pytest.approx(math.pi / 30)
        assert PRESET_I.period == pytest.approx(200e-12)

    def test_preset_ii(self):
        assert validate(PRESET_II) == []
        assert PRESET_II.omega12 == pytest.approx(2 * math.pi * 4.55e9)

    def test_omega12(self):
        assert PRESET_I.omega12 == pytest.approx(2 * math.pi * 4.6e9)
        assert 0 < PRESET_I.omega12 < PRESET_I.omega01

    def test_signed_alpha_normalized(self):
        p = QubitParams.from_hz(5e9, -400e6, math.pi / 30)
        assert p.alpha == pytest.approx(2 * math.pi * 400e6)

    def test_clock_defaults_to_resonance(self):
        assert PRESET_I.clock_omega == PRESET_I.omega01

    def test_levels(self):
        e0, e1, e2 = PRESET_I.levels
        assert e0 == 0.0
        assert e1 == PRESET_I.omega01
        assert e2 == pytest.approx(2 * PRESET_I.omega01 - PRESET_I.alpha)

    def test_zero_delta_theta(self):
        assert "delta_theta out of (0, π/2)" in validate(PRESET_I.replace(delta_theta=0.0))

    def test_alpha_too_large(self):
        bad = PRESET_I.replace(alpha=2 * PRESET_I.omega01)
        assert "alpha < omega01 required" in validate(bad)

    def test_harmonic_only_when_allowed(self):
        harmonic = PRESET_I.replace(alpha=0.0)
        assert "alpha > 0 required" in validate(harmonic)
        assert validate(harmonic, allow_harmonic=True) == []
        assert ensure_valid(harmonic, allow_harmonic=True) is harmonic

    def test_ensure_valid_raises(self):
        with pytest.raises(DomainError):
            ensure_valid(PRESET_I.replace(delta_theta=2.0))

    def test_validate_collects_all(self):
        bad = QubitParams(omega01=-1.0, alpha=0.0, delta_theta=0.0)
        assert len(validate(bad)) >= 3


class TestCoupling:
    def test_zero_coupling(self):
        assert delta_theta_from_circuit(CouplingSpec(0.0, 80e-15), PRESET_I.omega01) == 0.0

    def test_reference_value(self):
        omega = 2 * math.pi * 5e9
        expected = 0.1e-15 * 2.067833848e-15 * math.sqrt(2 * omega / (1.054571817e-34 * 80e-15))
        got = delta_theta_from_circuit(CouplingSpec(0.1e-15, 80e-15), omega)
        assert got == pytest.approx(expected, rel=1e-6)

    def test_scaling(self):
        omega = PRESET_I.omega01
        base = delta_theta_from_circuit(CouplingSpec(0.1e-15, 80e-15), omega)
        assert delta_theta_from_circuit(CouplingSpec(0.1e-15, 320e-15), omega) == pytest.approx(
            base / 2
        )
        assert delta_theta_from_circuit(CouplingSpec(0.1e-15, 80e-15), 4 * omega) == pytest.approx(
            2 * base
        )
        assert delta_theta_from_circuit(CouplingSpec(0.3e-15, 80e-15), omega) == pytest.approx(
            3 * base
        )

    def test_negative_coupling(self):
        with pytest.raises(DomainError):
            delta_theta_from_circuit(CouplingSpec(-1e-16, 80e-15), PRESET_I.omega01)

    def test_large_ratio_warns(self):
        with pytest.warns(CouplingWarning):
            CouplingSpec(20e-15, 80e-15)


class TestConfig:
    def test_defaults(self):
        config = load_config()
        params = config.qubit_params()
        assert params.delta_theta == pytest.approx(math.pi / 30)
        assert params.omega01 == pytest.approx(PRESET_I.omega01)

    def test_load_file(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"alpha_hz": 450e6, "delta_theta_rad": math.pi / 60,
                                    "rb": {"n_random": 5}}))
        config = load_config(path)
        assert config.rb.n_random == 5
        assert config.qubit_params().alpha == pytest.approx(PRESET_II.alpha)

    def test_coupling_source(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"coupling": {"c_coupling_f": 0.1e-15, "c_qubit_f": 80e-15}}))
        params = load_config(path).qubit_params()
        assert params.delta_theta == pytest.approx(
            delta_theta_from_circuit(CouplingSpec(0.1e-15, 80e-15), params.omega01)
        )

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({"omega01": 5e9}))
        with pytest.raises(ConfigError):
            load_config(path)

    def test_both_angle_sources(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps({
            "delta_theta_rad": 0.1,
            "coupling": {"c_coupling_f": 0.1e-15, "c_qubit_f": 80e-15},
        }))
        with pytest.raises(ConfigError):
            load_config(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(tmp_path / "nope.json")
