"""
Delta-Kick Engine

Three-level lab-frame propagation: exact free phases between pulses and a
matrix-exponential kick at each pulse.

A pulse of area Φ₀ applies exp(KICK_SCALE·δθ·M), whose 0–1 block is R_y(δθ).
The literal integral of the drive term would give exp(δθ·M), a 2δθ
rotation; KICK_SCALE is the one place that choice lives.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.linalg import expm

from ..core.errors import DataError, DomainError
from ..core.types import State3, Unitary3, basis_state
from ..params.types import QubitParams, ensure_valid
from ..pulsetrain.types import PulseTrain

logger = logging.getLogger("sfqdrive")

KICK_SCALE = 0.5

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class KickGenerator:
    """Real antisymmetric drive generator M, exponentiated per pulse."""

    name: str
    matrix: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (3, 3) or not np.array_equal(m.T, -m):
            raise DomainError("kick generator must be a real antisymmetric 3x3 matrix")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def transmon(cls) -> KickGenerator:
        """Charge-coupled transmon: ⟨1|n|2⟩ = √2·⟨0|n|1⟩."""
        return cls(
            "transmon",
            np.array([[0.0, -1.0, 0.0], [1.0, 0.0, -SQRT2], [0.0, SQRT2, 0.0]]),
        )

    @classmethod
    def two_level(cls) -> KickGenerator:
        """1–2 coupling removed; |2⟩ is spectator, the ideal-qubit limit."""
        return cls(
            "two_level",
            np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]),
        )


TRANSMON = KickGenerator.transmon()
TWO_LEVEL = KickGenerator.two_level()


def level_phases(dt: float, params: QubitParams) -> np.ndarray:
    return np.exp(-1j * np.asarray(params.levels) * dt)


def free_propagator(dt: float, params: QubitParams) -> Unitary3:
    """diag(1, e^{−iω₀₁dt}, e^{−i(2ω₀₁−α)dt})."""
    if dt < 0:
        raise DomainError(f"free evolution needs dt >= 0, got {dt!r}")
    return np.diag(level_phases(dt, params))


def kick_propagator(kick_angle: float, generator: KickGenerator = TRANSMON) -> Unitary3:
    if not abs(kick_angle) < math.pi:
        raise DomainError(f"|kick_angle| must be < π, got {kick_angle!r}")
    return expm(KICK_SCALE * kick_angle * generator.matrix).astype(complex)


def evolve_kicks(
    train: PulseTrain,
    params: QubitParams,
    initial: Optional[State3] = None,
    start: Optional[float] = None,
    stop: Optional[float] = None,
    generator: KickGenerator = TRANSMON,
) -> tuple[State3, Unitary3]:
    """
    Compose free phases and kicks chronologically over [start, stop].

    ``start`` and ``stop`` default to the first and last event. Returns the
    final state and the lab-frame propagator. An empty train with no window
    is the identity.
    """
    ensure_valid(params)
    psi0 = basis_state(0) if initial is None else np.asarray(initial, dtype=complex)
    times = train.times
    if times.size and np.any(np.diff(times) <= 0):
        raise DataError("pulse event times must be strictly increasing")
    t0 = (float(times[0]) if times.size else 0.0) if start is None else start
    t1 = (float(times[-1]) if times.size else t0) if stop is None else stop
    if times.size and (times[0] < t0 or times[-1] > t1):
        raise DataError("pulse events fall outside the evolution window")
    if t1 < t0:
        raise DomainError("evolution window must have stop >= start")

    kicks: dict[float, Unitary3] = {}
    u = np.eye(3, dtype=complex)
    now = t0
    phi0 = params.constants.phi0
    for event in train.events:
        u = level_phases(event.time - now, params)[:, None] * u
        angle = params.delta_theta * event.polarity * event.area / phi0
        kick = kicks.get(angle)
        if kick is None:
            kick = kicks[angle] = kick_propagator(angle, generator)
        u = kick @ u
        now = event.time
    u = level_phases(t1 - now, params)[:, None] * u
    logger.debug("evolve_kicks: %d events, window %.6g s", len(train), t1 - t0)
    return u @ psi0, u


def to_rotating_frame(u: Unitary3, start: float, stop: float, params: QubitParams) -> Unitary3:
    """D(stop)†·U·D(start) with D(t) = free_propagator(t) anchored at t = 0."""
    return np.conj(level_phases(stop, params))[:, None] * u * level_phases(start, params)[None, :]


def gate_propagator(
    train: PulseTrain,
    params: QubitParams,
    start: Optional[float] = None,
    stop: Optional[float] = None,
    generator: KickGenerator = TRANSMON,
) -> Unitary3:
    """Rotating-frame propagator of a train over [start, stop]."""
    times = train.times
    t0 = (float(times[0]) if times.size else 0.0) if start is None else start
    t1 = (float(times[-1]) if times.size else t0) if stop is None else stop
    _, u = evolve_kicks(train, params, start=t0, stop=t1, generator=generator)
    return to_rotating_frame(u, t0, t1, params)
