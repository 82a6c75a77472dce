"""
Sampled-waveform integrator.

Fixed-step fourth-order Runge–Kutta locked to the samples: each step spans
two sample intervals so the midpoint drive is a sample. An odd trailing
interval is taken as one short step with a linearly interpolated midpoint.
Halving the step means rendering the waveform at twice the sample rate.
"""

from __future__ import annotations

import logging
import math
from typing import Optional

import numpy as np

from ..core.errors import ResolutionError
from ..core.types import State3, basis_state
from ..params.types import QubitParams, ensure_valid
from ..pulsetrain.types import Waveform
from .kicks import KICK_SCALE, TRANSMON, KickGenerator

logger = logging.getLogger("sfqdrive")

MIN_SAMPLES_PER_FWHM = 10.0
MIN_SAMPLES_PER_PERIOD = 20.0


def check_resolution(
    waveform: Waveform, params: QubitParams, fwhm: Optional[float] = None
) -> None:
    """Raise ResolutionError unless the sampling resolves both pulse and |2⟩ phase."""
    dt = waveform.sample_interval
    fastest = 2.0 * math.pi / params.levels[2]
    if fastest / dt < MIN_SAMPLES_PER_PERIOD:
        raise ResolutionError(
            f"{fastest / dt:.3g} samples per 2π/(2ω₀₁−α); need {MIN_SAMPLES_PER_PERIOD:g}"
        )
    if fwhm is not None and fwhm / dt < MIN_SAMPLES_PER_FWHM:
        raise ResolutionError(
            f"{fwhm / dt:.3g} samples per pulse FWHM; need {MIN_SAMPLES_PER_FWHM:g}"
        )


def evolve_waveform(
    waveform: Waveform,
    params: QubitParams,
    initial: Optional[State3] = None,
    fwhm: Optional[float] = None,
    generator: KickGenerator = TRANSMON,
) -> State3:
    """
    Integrate dψ/dt = −i·E∘ψ + (KICK_SCALE·δθ/Φ₀)·V(t)·M·ψ in the lab frame
    from the first to the last sample.
    """
    ensure_valid(params)
    check_resolution(waveform, params, fwhm)
    levels = np.asarray(params.levels)
    gain = KICK_SCALE * params.delta_theta / params.constants.phi0
    m = generator.matrix
    v = waveform.samples
    dt = waveform.sample_interval

    def rhs(psi: np.ndarray, volt: float) -> np.ndarray:
        return -1j * levels * psi + (gain * volt) * (m @ psi)

    def step(psi: np.ndarray, h: float, v0: float, vm: float, v1: float) -> np.ndarray:
        k1 = rhs(psi, v0)
        k2 = rhs(psi + 0.5 * h * k1, vm)
        k3 = rhs(psi + 0.5 * h * k2, vm)
        k4 = rhs(psi + h * k3, v1)
        return psi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    psi = basis_state(0) if initial is None else np.asarray(initial, dtype=complex).copy()
    last = v.size - 1
    j = 0
    while j + 2 <= last:
        psi = step(psi, 2.0 * dt, v[j], v[j + 1], v[j + 2])
        j += 2
    if j < last:
        psi = step(psi, dt, v[j], 0.5 * (v[j] + v[j + 1]), v[j + 1])
    logger.debug("evolve_waveform: %d samples, norm drift %.3g", v.size,
                 abs(float(np.vdot(psi, psi).real) - 1.0))
    return psi
