"""
Bloch-sphere trajectories of dual-pulse schedules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from ..core.errors import DomainError
from ..core.export import write_csv
from ..pulsetrain.types import DualPulseSchedule
from .rotations import _SX, _SY, _SZ, rotation_xy, rotation_z

BLOCH_NORM_TOL = 1e-10


@dataclass(frozen=True)
class BlochPoint:
    x: float
    y: float
    z: float
    t: float = 0.0

    def __post_init__(self) -> None:
        if self.x**2 + self.y**2 + self.z**2 > 1.0 + BLOCH_NORM_TOL:
            raise DomainError("Bloch vector longer than 1")

    @property
    def norm(self) -> float:
        return math.sqrt(self.x**2 + self.y**2 + self.z**2)

    @classmethod
    def from_state(cls, state: np.ndarray, t: float = 0.0) -> BlochPoint:
        psi = np.asarray(state, dtype=complex)[:2]
        rho = np.outer(psi, psi.conj())
        return cls(
            x=float(np.real(np.trace(rho @ _SX))),
            y=float(np.real(np.trace(rho @ _SY))),
            z=float(np.real(np.trace(rho @ _SZ))),
            t=t,
        )

    def to_state(self) -> np.ndarray:
        """Pure state with this Bloch vector; requires |r| = 1."""
        if abs(self.norm - 1.0) > 1e-8:
            raise DomainError("only pure states (|r| = 1) map to a state vector")
        theta = math.acos(max(-1.0, min(1.0, self.z)))
        phase = math.atan2(self.y, self.x)
        return np.array(
            [math.cos(theta / 2), np.exp(1j * phase) * math.sin(theta / 2)], dtype=complex
        )


NORTH = BlochPoint(0.0, 0.0, 1.0)


def evolve_bloch(
    schedule: DualPulseSchedule,
    initial: BlochPoint = NORTH,
    substeps: int = 16,
) -> list[BlochPoint]:
    """
    Sample the trajectory of a dual-pulse schedule.

    Each cycle window is laid out as φ / 2π − 2φ / φ in precession phase: free
    precession R_z(+ω₀₁·dt) for φ_k/ω₀₁, a δθ kick about n(ψ_k), 2π − 2φ_k of
    precession, a second kick and a closing φ_k/ω₀₁. With ψ_k = 0 a cycle
    equals ``cycle_unitary_exact(δθ, φ_k)``, so the rotation sense matches
    ``train_propagator``. Skipped cycle indices precess idly.
    """
    if substeps < 1:
        raise DomainError("substeps must be >= 1")
    params = schedule.params
    omega = params.omega01
    period = params.period
    dtheta = params.delta_theta
    state = initial.to_state()
    points = [BlochPoint.from_state(state, 0.0)]
    t = 0.0

    def precess(duration: float) -> None:
        nonlocal state, t
        if duration <= 0:
            return
        step = rotation_z(omega * duration / substeps)
        for _ in range(substeps):
            state = step @ state
            t += duration / substeps
            points.append(BlochPoint.from_state(state, t))

    expected = schedule.cycles[0].index if schedule.cycles else 0
    for cycle in schedule.cycles:
        for _ in range(cycle.index - expected):
            precess(period)
        expected = cycle.index + 1
        edge = cycle.phi / omega
        kick = rotation_xy(dtheta, cycle.psi)
        precess(edge)
        state = kick @ state
        points.append(BlochPoint.from_state(state, t))
        precess((2.0 * math.pi - 2.0 * cycle.phi) / omega)
        state = kick @ state
        points.append(BlochPoint.from_state(state, t))
        precess(edge)
    return points


def trajectory_to_csv(
    points: Sequence[BlochPoint], path: str | Path, title: Optional[str] = None
) -> Path:
    rows = ((p.t, p.x, p.y, p.z) for p in points)
    return write_csv(path, ["t_s", "x", "y", "z"], rows, title)
