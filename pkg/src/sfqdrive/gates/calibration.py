"""
Gate Calibration

Coarse dual-pulse calibration solves n·2cos(φ)·δθ = Θ; fine calibration
refines φ by maximizing the simulated gate fidelity of the three-level kick
engine. The single-pulse scheme uses round(Θ/δθ) pulses and has no φ.

The z-type part of a simulated gate error (AC-Stark shift from the 1–2
coupling, second-order tilt of each cycle) is removed by frame advances
before and after the train. They are applied by the compiler as virtual Z
rotations and cost no pulses.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

import numpy as np
from scipy.optimize import minimize_scalar

from ..core.errors import CalibrationError, DomainError
from ..core.types import Unitary2, Unitary3
from ..params.types import PHI_MAX, PHI_MIN, QubitParams, ensure_valid
from ..pulsetrain.builders import (
    dual_sequence,
    max_strength,
    min_cycles,
    single_sequence,
    uniform_phi,
)
from ..pulsetrain.types import PulseTrain
from ..spectrum.phasor import leakage_ratio
from ..transmon.kicks import TRANSMON, KickGenerator, gate_propagator
from ..transmon.metrics import gate_fidelity
from ..twolevel.rotations import rotation_xy, rotation_z, zyz_angles

logger = logging.getLogger("sfqdrive")

FINE_WINDOW = 0.02
FINE_XATOL = 1e-9
_EDGE_TOL = 1e-7
_RATIO_TIE = 1e-9


class Scheme(str, Enum):
    SINGLE = "single"
    DUAL = "dual"


@dataclass(frozen=True)
class CalibratedGate:
    """
    A physical rotation realized as a pulse train.

    ``phi`` is NaN for the single-pulse scheme. ``warnings`` collects
    fine-calibration boundary notes. ``frame_pre`` and ``frame_post`` are
    virtual-Z frame advances around the train: the simulated gate equals
    R_z(frame_post)·R(Θ, ψ)·R_z(frame_pre) on the computational block.
    """

    target_angle: float
    axis_phase: float
    n_cycles: int
    phi: float
    name: str = ""
    scheme: Scheme = Scheme.DUAL
    hardware_constrained: bool = False
    fine_tuned: bool = False
    achieved_fidelity: Optional[float] = None
    warnings: tuple[str, ...] = ()
    frame_pre: float = 0.0
    frame_post: float = 0.0

    @property
    def target(self) -> Unitary2:
        return rotation_xy(self.target_angle, self.axis_phase)

    def train(self, params: QubitParams, axis_phase: Optional[float] = None) -> PulseTrain:
        """Pulse train on cycles 0..n−1, about ``axis_phase`` if given."""
        psi = self.axis_phase if axis_phase is None else axis_phase
        psi = psi % (2.0 * math.pi)
        if self.scheme is Scheme.SINGLE:
            return single_sequence(self.n_cycles, params, psi)
        _, train = dual_sequence(self.n_cycles, self.phi, psi, params, self.hardware_constrained)
        return train

    def to_dict(self) -> dict:
        return {
            "target_angle_rad": self.target_angle,
            "axis_phase_rad": self.axis_phase,
            "n_cycles": self.n_cycles,
            "phi_rad": self.phi,
            "scheme": self.scheme.value,
            "hardware_constrained": self.hardware_constrained,
            "fine_tuned": self.fine_tuned,
            "achieved_fidelity": self.achieved_fidelity,
            "warnings": list(self.warnings),
            "frame_pre_rad": self.frame_pre,
            "frame_post_rad": self.frame_post,
        }

    @classmethod
    def from_dict(cls, name: str, data: dict) -> CalibratedGate:
        phi = data.get("phi_rad")
        return cls(
            target_angle=float(data["target_angle_rad"]),
            axis_phase=float(data["axis_phase_rad"]),
            n_cycles=int(data["n_cycles"]),
            phi=math.nan if phi is None else float(phi),
            name=name,
            scheme=Scheme(data.get("scheme", "dual")),
            hardware_constrained=bool(data.get("hardware_constrained", False)),
            fine_tuned=bool(data.get("fine_tuned", False)),
            achieved_fidelity=data.get("achieved_fidelity"),
            warnings=tuple(data.get("warnings", ())),
            frame_pre=float(data.get("frame_pre_rad", 0.0)),
            frame_post=float(data.get("frame_post_rad", 0.0)),
        )


def phi_bounds(hardware_constrained: bool) -> tuple[float, float]:
    return (PHI_MIN, PHI_MAX) if hardware_constrained else (0.0, math.pi)


def calibrate_coarse(
    target_angle: float,
    n_cycles: int,
    params: QubitParams,
    hardware_constrained: bool = False,
    axis_phase: float = 0.0,
    name: str = "",
) -> CalibratedGate:
    """φ = arccos(Θ/(2·n·δθ)); raises CalibrationError naming the minimum n."""
    ensure_valid(params)
    if not target_angle > 0:
        raise DomainError("target_angle must be positive")
    needed = min_cycles(target_angle, params.delta_theta, hardware_constrained)
    if n_cycles < needed:
        raise CalibrationError(
            f"{n_cycles} cycles cannot reach {target_angle:.6g} rad "
            f"(per-cycle maximum {max_strength(params.delta_theta, hardware_constrained):.6g}); "
            f"minimum feasible n = {needed}",
            min_cycles=needed,
        )
    phi = uniform_phi(n_cycles, target_angle, params.delta_theta)
    return CalibratedGate(
        target_angle=target_angle,
        axis_phase=axis_phase,
        n_cycles=n_cycles,
        phi=phi,
        name=name,
        hardware_constrained=hardware_constrained,
    )


def calibrate_single(
    target_angle: float,
    params: QubitParams,
    axis_phase: float = 0.0,
    name: str = "",
) -> CalibratedGate:
    """Single-pulse gate of round(Θ/δθ) equally spaced pulses."""
    ensure_valid(params)
    n = round(target_angle / params.delta_theta)
    if n < 1:
        raise CalibrationError(
            f"{target_angle:.6g} rad is below one pulse ({params.delta_theta:.6g} rad)",
            min_cycles=1,
        )
    return CalibratedGate(
        target_angle=target_angle,
        axis_phase=axis_phase,
        n_cycles=n,
        phi=math.nan,
        name=name,
        scheme=Scheme.SINGLE,
    )


def simulate_gate(
    gate: CalibratedGate, params: QubitParams, generator: KickGenerator = TRANSMON
) -> Unitary3:
    """Rotating-frame three-level propagator of the gate's train."""
    return gate_propagator(gate.train(params), params, generator=generator)


def frame_corrections(u_sim: Unitary3, axis_phase: float = 0.0) -> tuple[float, float]:
    """
    ``(frame_pre, frame_post)`` that strip the z-type error of a simulated gate.

    The 0–1 block is written as R_z(post)·R(β, ψ)·R_z(pre). A train shifted in
    time is conjugated by a z rotation, so the pair does not depend on ψ.
    """
    block = np.asarray(u_sim, dtype=complex)[:2, :2]
    aligned = rotation_z(-axis_phase) @ block @ rotation_z(axis_phase)
    post, _, pre = zyz_angles(aligned)
    return pre, post


def corrected_block(u_sim: Unitary3, frame_pre: float, frame_post: float) -> Unitary2:
    """R_z(−frame_post)·P·U·P·R_z(−frame_pre) on the computational block."""
    block = np.asarray(u_sim, dtype=complex)[:2, :2]
    return rotation_z(-frame_post) @ block @ rotation_z(-frame_pre)


def evaluate_gate(
    gate: CalibratedGate, params: QubitParams, generator: KickGenerator = TRANSMON
) -> float:
    """Gate fidelity with the gate's own frame corrections applied."""
    u = simulate_gate(gate, params, generator)
    return gate_fidelity(corrected_block(u, gate.frame_pre, gate.frame_post), gate.target)


def calibrate_fine(
    coarse: CalibratedGate,
    params: QubitParams,
    generator: KickGenerator = TRANSMON,
    window: float = FINE_WINDOW,
    xatol: float = FINE_XATOL,
) -> CalibratedGate:
    """
    Bounded scalar search of φ within ±window·φ of the current value.

    Every trial φ is scored after its own frame corrections, so the search
    tunes the rotation angle while the z-type error goes to the frame. The
    window is clipped to the allowed φ range. The incoming gate is kept if
    the search does not improve on it.
    """
    if coarse.scheme is not Scheme.DUAL:
        raise CalibrationError("only dual-pulse gates have a phi to tune")
    lo_allowed, hi_allowed = phi_bounds(coarse.hardware_constrained)
    margin = 1e-12
    lo = coarse.phi * (1.0 - window)
    hi = coarse.phi * (1.0 + window)
    notes: list[str] = []
    if lo <= lo_allowed or hi >= hi_allowed:
        lo = max(lo, lo_allowed + margin)
        hi = min(hi, hi_allowed - margin)
        notes.append("fine window clipped to the allowed phi range")
        logger.warning("%s: fine window clipped to [%.6g, %.6g]", coarse.name or "gate", lo, hi)

    def corrected(phi: float) -> tuple[float, float, float]:
        u = simulate_gate(replace(coarse, phi=phi), params, generator)
        pre, post = frame_corrections(u, coarse.axis_phase)
        return gate_fidelity(corrected_block(u, pre, post), coarse.target), pre, post

    start = evaluate_gate(coarse, params, generator)
    result = minimize_scalar(lambda phi: 1.0 - corrected(phi)[0], bounds=(lo, hi),
                             method="bounded", options={"xatol": xatol})
    phi = float(result.x)
    achieved, pre, post = corrected(phi)
    if achieved < start:
        phi, achieved = coarse.phi, start
        pre, post = coarse.frame_pre, coarse.frame_post
    elif min(phi - lo, hi - phi) < _EDGE_TOL:
        notes.append("fine optimum at the search window edge")
        logger.warning("%s: fine optimum %.9g at window edge", coarse.name or "gate", phi)
    logger.info("calibrated %s: n=%d phi %.9g -> %.9g, fidelity %.8f -> %.8f, "
                "frame %.4g/%.4g rad", coarse.name or "gate", coarse.n_cycles, coarse.phi,
                phi, start, achieved, pre, post)
    return replace(
        coarse,
        phi=phi,
        fine_tuned=True,
        achieved_fidelity=achieved,
        warnings=coarse.warnings + tuple(notes),
        frame_pre=pre,
        frame_post=post,
    )


def suggest_cycle_count(
    params: QubitParams,
    total_angle: float = math.pi,
    hardware_constrained: bool = False,
    span: tuple[int, int] = (1, 4),
) -> int:
    """
    Uniform cycle count whose calibrated train has the smallest A(ω₁₂)/A(ω₀₁),
    searched over [span[0]·n_min, span[1]·n_min].

    Counts within ``_RATIO_TIE`` of the best ratio tie; the shortest wins.
    """
    ensure_valid(params)
    n_min = min_cycles(total_angle, params.delta_theta, hardware_constrained)
    lo, hi = span
    if not 1 <= lo <= hi:
        raise DomainError(f"cycle span {span} must satisfy 1 <= lo <= hi")
    ratios: dict[int, float] = {}
    for n in range(lo * n_min, hi * n_min + 1):
        phi = uniform_phi(n, total_angle, params.delta_theta)
        _, train = dual_sequence(n, phi, 0.0, params, hardware_constrained)
        ratios[n] = leakage_ratio(train, params)
    best_ratio = min(ratios.values())
    best_n = min(n for n, r in ratios.items() if r <= best_ratio + _RATIO_TIE)
    logger.debug("suggested n=%d (ratio %.4g)", best_n, ratios[best_n])
    return best_n
