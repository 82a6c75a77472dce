"""
Waveform rendering and export.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from ..core.errors import EmptyTrainError, ResolutionError
from ..core.export import write_csv, write_json
from .types import PulseKind, PulseShape, PulseTrain, Waveform

MIN_SAMPLES_PER_FWHM = 10.0
_TAIL_SIGMAS = 12.0


def render_waveform(
    train: PulseTrain,
    shape: PulseShape,
    sample_rate: float,
    padding: float = 50e-12,
) -> Waveform:
    """
    Sum of Gaussian voltage pulses, each integrating to its event's area.

    Spans [first − padding, last + padding]. Delta trains are consumed
    analytically and cannot be rendered.
    """
    if shape.kind is PulseKind.DELTA:
        raise ResolutionError("delta pulses cannot be sampled; use a gaussian shape")
    if sample_rate * shape.fwhm < MIN_SAMPLES_PER_FWHM:
        raise ResolutionError(
            f"sample_rate·fwhm = {sample_rate * shape.fwhm:.3g} < {MIN_SAMPLES_PER_FWHM:g}"
        )
    if len(train) == 0:
        raise EmptyTrainError("cannot render an empty train")
    dt = 1.0 / sample_rate
    times = train.times
    start = float(times[0]) - padding
    n_samples = int(math.ceil((float(times[-1]) + padding - start) / dt - 1e-9)) + 1
    samples = np.zeros(n_samples)
    sigma = shape.sigma
    norm = 1.0 / (sigma * math.sqrt(2.0 * math.pi))
    half_window = int(math.ceil(_TAIL_SIGMAS * sigma / dt))
    for event in train.events:
        center = (event.time - start) / dt
        lo = max(0, int(math.floor(center)) - half_window)
        hi = min(n_samples, int(math.ceil(center)) + half_window + 1)
        t = (np.arange(lo, hi) - center) * dt
        samples[lo:hi] += event.polarity * event.area * norm * np.exp(-0.5 * (t / sigma) ** 2)
    return Waveform(samples=samples, sample_interval=dt, start_time=start)


def train_to_csv(train: PulseTrain, path: str | Path) -> Path:
    rows = ((e.time, e.area, e.polarity) for e in train.events)
    return write_csv(path, ["time_s", "area_wb", "polarity"], rows)


def train_to_json(train: PulseTrain, path: str | Path) -> Path:
    payload = {
        "clock_period_s": train.clock_period,
        "cycles": train.cycles,
        "events": [
            {"time_s": e.time, "area_wb": e.area, "polarity": e.polarity} for e in train.events
        ],
    }
    return write_json(path, payload)


def waveform_to_csv(waveform: Waveform, path: str | Path) -> Path:
    return write_csv(path, ["time_s", "voltage_v"], zip(waveform.times, waveform.samples))
