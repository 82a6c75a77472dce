"""
Sequence Builders

Single-pulse, dual-pulse and envelope-shaped SFQ schedules.
"""

from __future__ import annotations

import logging
import math
from typing import Sequence

import numpy as np

from ..core.errors import EmptyTrainError, EnvelopeError
from ..params.types import PHI_MIN, QubitParams, ensure_valid
from .types import DualCycle, DualPulseSchedule, PulseEvent, PulseTrain

logger = logging.getLogger("sfqdrive")

DEFAULT_SIGMA_FACTOR = 4.0


def single_sequence(n: int, params: QubitParams, psi: float = 0.0) -> PulseTrain:
    """n equally spaced pulses at t = (k + ψ/2π)·T, each of area Φ₀."""
    if n < 1:
        raise EmptyTrainError("single sequence needs n >= 1 pulses")
    ensure_valid(params, allow_harmonic=True)
    period = params.period
    offset = psi / (2.0 * math.pi)
    events = tuple(
        PulseEvent(time=(k + offset) * period, area=params.constants.phi0) for k in range(n)
    )
    return PulseTrain(events=events, clock_period=period, cycles=n)


def dual_sequence(
    n: int,
    phi: float,
    psi: float,
    params: QubitParams,
    hardware_constrained: bool = False,
) -> tuple[DualPulseSchedule, PulseTrain]:
    """
    n cycles of pulse pairs at (k + ψ/2π)·T ± φ/ω₀₁.

    Raises PulseRangeError when phi leaves (0, π), or the hardware range when
    ``hardware_constrained`` is set.
    """
    if n < 1:
        raise EmptyTrainError("dual sequence needs n >= 1 cycles")
    ensure_valid(params, allow_harmonic=True)
    schedule = DualPulseSchedule(
        cycles=tuple(DualCycle(index=k, phi=phi, psi=psi) for k in range(n)),
        params=params,
        hardware_constrained=hardware_constrained,
    )
    return schedule, schedule.render()


def max_strength(delta_theta: float, hardware_constrained: bool = False) -> float:
    """Largest per-cycle effective rotation a dual pair can deliver."""
    if hardware_constrained:
        return 2.0 * delta_theta * math.cos(PHI_MIN)
    return 2.0 * delta_theta


def gaussian_envelope(
    n: int,
    total_angle: float,
    sigma_factor: float,
    delta_theta: float,
    hardware_constrained: bool = False,
) -> np.ndarray:
    """
    Per-cycle strengths s_k ∝ exp(−(k−(n−1)/2)²/(2σ²)), σ = n/sigma_factor,
    truncated to the gate window and normalized so Σ s_k = total_angle.
    """
    if n < 1:
        raise EmptyTrainError("envelope needs n >= 1 cycles")
    if not total_angle > 0:
        raise EnvelopeError("total_angle must be positive", total_angle, 0.0)
    sigma = n / sigma_factor
    k = np.arange(n, dtype=float)
    weights = np.exp(-((k - (n - 1) / 2.0) ** 2) / (2.0 * sigma**2))
    strengths = total_angle * weights / weights.sum()
    available = max_strength(delta_theta, hardware_constrained)
    peak = float(strengths.max())
    if peak > available:
        raise EnvelopeError(
            f"peak strength {peak:.6g} rad exceeds available {available:.6g} rad "
            f"for n={n}",
            required=peak,
            available=available,
        )
    return strengths


def shaped_sequence(
    strengths: Sequence[float],
    psi: float,
    params: QubitParams,
    hardware_constrained: bool = False,
) -> tuple[DualPulseSchedule, PulseTrain]:
    """
    Dual schedule with phi_k = arccos(s_k / 2δθ) per cycle.

    Strengths must lie in [0, 2δθ]; a reversed drive is expressed through the
    axis phase, not through negative strengths.
    """
    values = np.asarray(strengths, dtype=float)
    if values.size == 0:
        raise EmptyTrainError("shaped sequence needs at least one cycle")
    ensure_valid(params, allow_harmonic=True)
    limit = 2.0 * params.delta_theta
    lowest = float(values.min())
    if lowest < 0:
        raise EnvelopeError(
            f"strength {lowest:.6g} rad is negative", required=lowest, available=0.0
        )
    worst = float(values.max())
    if worst > limit:
        raise EnvelopeError(
            f"strength {worst:.6g} rad exceeds 2·delta_theta = {limit:.6g} rad",
            required=worst,
            available=limit,
        )
    phis = np.arccos(values / limit)
    cycles = tuple(DualCycle(index=k, phi=float(p), psi=psi) for k, p in enumerate(phis))
    schedule = DualPulseSchedule(
        cycles=cycles, params=params, hardware_constrained=hardware_constrained
    )
    logger.debug("shaped sequence: %d cycles, phi range [%.4f, %.4f]", len(cycles),
                 float(phis.min()), float(phis.max()))
    return schedule, schedule.render()


def min_cycles(total_angle: float, delta_theta: float, hardware_constrained: bool = False) -> int:
    """Fewest uniform dual cycles whose phi stays strictly inside the allowed range."""
    ratio = abs(total_angle) / max_strength(delta_theta, hardware_constrained)
    return int(math.floor(ratio + 1e-9)) + 1


def uniform_phi(n: int, total_angle: float, delta_theta: float) -> float:
    """phi giving n·2cos(φ)·δθ = total_angle; negative angles map above π/2."""
    return math.acos(total_angle / (2.0 * n * delta_theta))
