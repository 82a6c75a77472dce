"""
Pulse Train Types

Timed SFQ pulse events, dual-pulse schedules, pulse shapes and sampled
waveforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from ..core.errors import DataError, DomainError, PulseRangeError
from ..params.types import DEFAULT_CONSTANTS, PHI_MAX, PHI_MIN, QubitParams

FWHM_TO_SIGMA = 1.0 / (2.0 * math.sqrt(2.0 * math.log(2.0)))


# ============================================================================
# Events and trains
# ============================================================================


@dataclass(frozen=True)
class PulseEvent:
    """One SFQ pulse: arrival time (s), voltage-time area (Wb) and polarity."""

    time: float
    area: float = DEFAULT_CONSTANTS.phi0
    polarity: int = 1

    def __post_init__(self) -> None:
        if not self.area > 0:
            raise DomainError(f"pulse area must be positive, got {self.area!r}")
        if self.polarity not in (1, -1):
            raise DomainError(f"polarity must be +1 or -1, got {self.polarity!r}")
        if not math.isfinite(self.time):
            raise DomainError("pulse time must be finite")


@dataclass(frozen=True)
class PulseTrain:
    """
    Chronological SFQ pulse events on a clock grid.

    ``cycles`` is the number of clock cycles the train occupies on its grid;
    it is what concatenation advances by.
    """

    events: tuple[PulseEvent, ...]
    clock_period: float
    cycles: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "events", tuple(self.events))
        if not self.clock_period > 0:
            raise DomainError("clock_period must be positive")
        times = [e.time for e in self.events]
        if any(b <= a for a, b in zip(times, times[1:])):
            raise DataError("pulse event times must be strictly increasing")

    def __len__(self) -> int:
        return len(self.events)

    @property
    def times(self) -> np.ndarray:
        return np.array([e.time for e in self.events], dtype=float)

    @property
    def areas(self) -> np.ndarray:
        return np.array([e.area for e in self.events], dtype=float)

    @property
    def polarities(self) -> np.ndarray:
        return np.array([e.polarity for e in self.events], dtype=float)

    @property
    def duration(self) -> float:
        return self.cycles * self.clock_period

    def shifted(self, dt: float) -> PulseTrain:
        """Same train with every event moved by dt seconds."""
        return replace(self, events=tuple(replace(e, time=e.time + dt) for e in self.events))

    def mirrored(self) -> PulseTrain:
        """Time-reversed (t → −t) train with flipped polarities."""
        events = tuple(
            PulseEvent(time=-e.time, area=e.area, polarity=-e.polarity)
            for e in reversed(self.events)
        )
        return replace(self, events=events)

    @classmethod
    def empty(cls, clock_period: float) -> PulseTrain:
        return cls(events=(), clock_period=clock_period, cycles=0)


def concatenate(trains: Sequence[PulseTrain]) -> PulseTrain:
    """Join trains in order; each train's times are already absolute."""
    if not trains:
        raise DataError("nothing to concatenate")
    period = trains[0].clock_period
    events: list[PulseEvent] = []
    for train in trains:
        events.extend(train.events)
    return PulseTrain(events=tuple(events), clock_period=period, cycles=sum(t.cycles for t in trains))


# ============================================================================
# Dual-pulse schedule
# ============================================================================


@dataclass(frozen=True)
class DualCycle:
    """Per-cycle half-interval phase phi_k and axis phase psi_k."""

    index: int
    phi: float
    psi: float = 0.0


def check_phi(phi: float, hardware_constrained: bool) -> None:
    """Raise PulseRangeError naming the violated bound."""
    if hardware_constrained:
        if not phi > PHI_MIN:
            raise PulseRangeError(
                f"phi={phi / math.pi:.4g}π below hardware lower bound 0.0423π", PHI_MIN
            )
        if not phi < PHI_MAX:
            raise PulseRangeError(
                f"phi={phi / math.pi:.4g}π above hardware upper bound 0.958π", PHI_MAX
            )
    else:
        if not phi > 0.0:
            raise PulseRangeError(f"phi={phi!r} must be > 0", 0.0)
        if not phi < math.pi:
            raise PulseRangeError(f"phi={phi!r} must be < π", math.pi)


@dataclass(frozen=True)
class DualPulseSchedule:
    """Cycles of a dual-SFQ-pulse sequence with their phases."""

    cycles: tuple[DualCycle, ...]
    params: QubitParams
    hardware_constrained: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "cycles", tuple(self.cycles))
        indices = [c.index for c in self.cycles]
        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise DataError("cycle indices must be strictly increasing")
        for c in self.cycles:
            check_phi(c.phi, self.hardware_constrained)

    def __len__(self) -> int:
        return len(self.cycles)

    def center(self, cycle: DualCycle) -> float:
        """Pair center time (k + ψ/2π)·T."""
        return (cycle.index + cycle.psi / (2.0 * math.pi)) * self.params.period

    def pair_times(self, cycle: DualCycle) -> tuple[float, float]:
        c = self.center(cycle)
        half = cycle.phi / self.params.omega01
        return c - half, c + half

    def render(self, area: Optional[float] = None) -> PulseTrain:
        """Expand into the 2n pulse events."""
        area = self.params.constants.phi0 if area is None else area
        events: list[PulseEvent] = []
        for cycle in self.cycles:
            t_minus, t_plus = self.pair_times(cycle)
            events.append(PulseEvent(t_minus, area))
            events.append(PulseEvent(t_plus, area))
        n = self.cycles[-1].index + 1 if self.cycles else 0
        return PulseTrain(events=tuple(events), clock_period=self.params.period, cycles=n)


# ============================================================================
# Shapes and waveforms
# ============================================================================


class PulseKind(str, Enum):
    DELTA = "delta"
    GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class PulseShape:
    """Delta idealization or Gaussian voltage pulse of given FWHM (s)."""

    kind: PulseKind = PulseKind.GAUSSIAN
    fwhm: float = 2e-12

    def __post_init__(self) -> None:
        if not self.fwhm > 0:
            raise DomainError("fwhm must be positive")

    @classmethod
    def delta(cls) -> PulseShape:
        return cls(kind=PulseKind.DELTA)

    @classmethod
    def gaussian(cls, fwhm: float = 2e-12) -> PulseShape:
        return cls(kind=PulseKind.GAUSSIAN, fwhm=fwhm)

    @property
    def sigma(self) -> float:
        return self.fwhm * FWHM_TO_SIGMA

    def form_factor(self, omega: float) -> float:
        """Fourier magnitude of a unit-area pulse at angular frequency omega."""
        if self.kind is PulseKind.DELTA:
            return 1.0
        return math.exp(-0.5 * (omega * self.sigma) ** 2)


@dataclass(frozen=True)
class Waveform:
    """Uniformly sampled voltage V(t)."""

    samples: np.ndarray = field(repr=False)
    sample_interval: float
    start_time: float

    def __post_init__(self) -> None:
        if not self.sample_interval > 0:
            raise DomainError("sample_interval must be positive")
        object.__setattr__(self, "samples", np.asarray(self.samples, dtype=float))

    def __len__(self) -> int:
        return int(self.samples.size)

    @property
    def times(self) -> np.ndarray:
        return self.start_time + self.sample_interval * np.arange(self.samples.size)

    @property
    def end_time(self) -> float:
        return self.start_time + self.sample_interval * (self.samples.size - 1)
