"""
Phasor-Sum Spectra

Single-frequency Fourier amplitudes of pulse trains, evaluated directly from
the event list: A(ω) = |F(ω)·Σ_k p_k·(a_k/Φ₀)·e^{−iωt_k}| / N.

N is the pulse count by default. With ``per_cycle`` it is the cycle count,
which makes a dual train comparable to a single train of equal length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from ..core.errors import DomainError, EmptyTrainError
from ..core.export import write_csv
from ..params.types import DEFAULT_CONSTANTS, QubitParams, ensure_valid
from ..pulsetrain.builders import dual_sequence, single_sequence
from ..pulsetrain.types import PulseShape, PulseTrain

AMPLITUDE_FLOOR = 1e-12
BAND_POINTS = 65


def phasor_sum(train: PulseTrain, omega: float, shape: PulseShape | None = None) -> complex:
    """F(ω)·Σ p_k (a_k/Φ₀) e^{−iωt_k}, unnormalized."""
    shape = shape or PulseShape.delta()
    weights = train.polarities * train.areas / DEFAULT_CONSTANTS.phi0
    total = np.sum(weights * np.exp(-1j * omega * train.times))
    return complex(shape.form_factor(omega) * total)


def spectral_component(
    train: PulseTrain,
    omega: float,
    shape: PulseShape | None = None,
    per_cycle: bool = False,
) -> float:
    """Normalized spectral amplitude; the resonant single train gives 1 for delta pulses."""
    if len(train) == 0:
        raise EmptyTrainError("spectral component of an empty train")
    if not omega > 0:
        raise DomainError("omega must be positive")
    count = train.cycles if per_cycle and train.cycles > 0 else len(train)
    return abs(phasor_sum(train, omega, shape)) / count


@dataclass(frozen=True)
class SpectralQuery:
    omega: float
    train: PulseTrain
    shape: PulseShape = field(default_factory=PulseShape.delta)

    def __post_init__(self) -> None:
        if not self.omega > 0:
            raise DomainError("omega must be positive")

    def amplitude(self, per_cycle: bool = False) -> float:
        return spectral_component(self.train, self.omega, self.shape, per_cycle)


def leakage_ratio(
    train: PulseTrain, params: QubitParams, shape: PulseShape | None = None
) -> float:
    """A(ω₁₂)/A(ω₀₁); raises DomainError when the resonant amplitude vanishes."""
    resonant = spectral_component(train, params.omega01, shape)
    if resonant < AMPLITUDE_FLOOR:
        raise DomainError(f"A(ω₀₁) = {resonant:.3g} too small to normalize by")
    return spectral_component(train, params.omega12, shape) / resonant


def band_leakage_ratio(
    train: PulseTrain,
    params: QubitParams,
    half_width: float,
    shape: PulseShape | None = None,
    points: int = BAND_POINTS,
) -> float:
    """
    Peak A(ω)/A(ω₀₁) over ω₁₂ ± half_width.

    A uniform train has exact comb nulls at ω₁₂ for some lengths; the band
    peak follows the sidelobe envelope instead.
    """
    if not 0 < half_width < params.omega12:
        raise DomainError("half_width must lie in (0, ω₁₂)")
    resonant = spectral_component(train, params.omega01, shape)
    if resonant < AMPLITUDE_FLOOR:
        raise DomainError(f"A(ω₀₁) = {resonant:.3g} too small to normalize by")
    grid = np.linspace(params.omega12 - half_width, params.omega12 + half_width, points)
    return max(spectral_component(train, float(w), shape) for w in grid) / resonant


# ============================================================================
# Tuning curve
# ============================================================================


@dataclass(frozen=True)
class TuningCurve:
    """
    Dual/single resonant amplitude ratio over a φ grid.

    ``amplitude_ratio`` is |2cos φ|; ``signed_ratio`` keeps the sign of the
    dual phasor relative to the single one, so φ > π/2 shows as a reversed
    drive.
    """

    two_phi: np.ndarray
    amplitude_ratio: np.ndarray
    signed_ratio: np.ndarray
    n_cycles: int
    normalization: str = "per_cycle"

    def __post_init__(self) -> None:
        if np.any(np.diff(self.two_phi) <= 0):
            raise DomainError("two_phi grid must be ascending")

    def __len__(self) -> int:
        return int(self.two_phi.size)

    def to_csv(self, path: str | Path, title: Optional[str] = None) -> Path:
        rows = zip(self.two_phi, self.amplitude_ratio, self.signed_ratio)
        return write_csv(path, ["two_phi_rad", "amplitude_ratio", "signed_ratio"], rows, title)


def tuning_curve(
    phi_grid: Sequence[float],
    params: QubitParams,
    n: int = 30,
    shape: PulseShape | None = None,
) -> TuningCurve:
    """Resonant amplitude of n dual cycles relative to n single pulses, per cycle."""
    ensure_valid(params, allow_harmonic=True)
    single = phasor_sum(single_sequence(n, params), params.omega01, shape)
    amplitude, signed = [], []
    for phi in phi_grid:
        _, train = dual_sequence(n, phi, 0.0, params)
        ratio = phasor_sum(train, params.omega01, shape) / single
        amplitude.append(abs(ratio))
        signed.append(ratio.real)
    return TuningCurve(
        two_phi=2.0 * np.asarray(phi_grid, dtype=float),
        amplitude_ratio=np.asarray(amplitude),
        signed_ratio=np.asarray(signed),
        n_cycles=n,
    )


def default_phi_grid(n_points: int) -> np.ndarray:
    """Open grid strictly inside (0, π)."""
    return math.pi * (np.arange(n_points) + 0.5) / n_points
