"""
Run configuration

JSON parameter files parsed with pydantic; frequencies are given in Hz and
converted to rad/s when the domain QubitParams is built.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..core.errors import ConfigError
from .types import CouplingSpec, QubitParams, delta_theta_from_circuit


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class CouplingSection(_Section):
    c_coupling_f: float = Field(ge=0)
    c_qubit_f: float = Field(gt=0)


class TuningCurveSection(_Section):
    n_points: int = Field(default=200, ge=2)
    n_cycles: int = Field(default=30, ge=1)


class LeakageRatioSection(_Section):
    n_points: int = Field(default=200, ge=2)
    target_angle_rad: float = Field(default=math.pi, gt=0)
    max_cycles: int = Field(default=2000, ge=1)


class EnvelopeSection(_Section):
    gate_lengths_s: list[float] = Field(default_factory=lambda: [6e-9, 8e-9, 12e-9, 16e-9])
    sigma_factor: float = Field(default=4.0, gt=0)


class CalibrateSection(_Section):
    mode: Literal["single-pulse", "dual-coarse", "dual-fine"] = "dual-fine"
    n_cycles_per_primitive: Optional[int] = Field(default=None, ge=1)


class RBSection(_Section):
    sequence_lengths: list[int] = Field(default_factory=lambda: [2, 4, 8, 16, 32, 64, 128])
    n_random: int = Field(default=100, ge=1)
    mode: Literal["single-pulse", "dual-coarse", "dual-fine", "ideal"] = "dual-fine"
    n_cycles_per_primitive: Optional[int] = Field(default=None, ge=1)
    three_level: bool = True


class TrajectorySection(_Section):
    n_cycles: int = Field(default=1, ge=0)
    phi_rad: float = Field(default=math.pi / 2)
    psi_rad: float = 0.0
    substeps: int = Field(default=16, ge=1)
    initial: tuple[float, float, float] = (0.0, 0.0, 1.0)


class RunConfig(_Section):
    """Top-level config: qubit parameters plus one section per command."""

    omega01_hz: float = Field(default=5e9, gt=0)
    alpha_hz: float = 400e6
    delta_theta_rad: Optional[float] = None
    coupling: Optional[CouplingSection] = None
    clock_hz: Optional[float] = Field(default=None, gt=0)
    seed: int = 0
    hardware_constrained: bool = False

    tuning_curve: TuningCurveSection = Field(default_factory=TuningCurveSection)
    leakage_ratio: LeakageRatioSection = Field(default_factory=LeakageRatioSection)
    envelope_compare: EnvelopeSection = Field(default_factory=EnvelopeSection)
    calibrate: CalibrateSection = Field(default_factory=CalibrateSection)
    rb: RBSection = Field(default_factory=RBSection)
    trajectory: TrajectorySection = Field(default_factory=TrajectorySection)

    @model_validator(mode="after")
    def _one_angle_source(self) -> RunConfig:
        if self.delta_theta_rad is not None and self.coupling is not None:
            raise ValueError("give either delta_theta_rad or coupling, not both")
        if self.delta_theta_rad is None and self.coupling is None:
            self.delta_theta_rad = math.pi / 30
        return self

    def qubit_params(self) -> QubitParams:
        omega01 = 2.0 * math.pi * self.omega01_hz
        if self.coupling is not None:
            delta_theta = delta_theta_from_circuit(
                CouplingSpec(self.coupling.c_coupling_f, self.coupling.c_qubit_f), omega01
            )
        else:
            delta_theta = float(self.delta_theta_rad)  # type: ignore[arg-type]
        return QubitParams.from_hz(self.omega01_hz, self.alpha_hz, delta_theta, self.clock_hz)


def load_config(path: Optional[str | Path] = None) -> RunConfig:
    """Parse a JSON config file; no path gives the defaults (parameter set I)."""
    if path is None:
        return RunConfig()
    try:
        raw = json.loads(Path(path).read_text())
        return RunConfig.model_validate(raw)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    except ValidationError as e:
        raise ConfigError(f"invalid config {path}: {e.errors()[0]['msg']}") from e
