"""SFQ pulse schedules, shapes and sampled waveforms."""

from .builders import (
    DEFAULT_SIGMA_FACTOR,
    dual_sequence,
    gaussian_envelope,
    max_strength,
    min_cycles,
    shaped_sequence,
    single_sequence,
    uniform_phi,
)
from .types import (
    DualCycle,
    DualPulseSchedule,
    PulseEvent,
    PulseKind,
    PulseShape,
    PulseTrain,
    Waveform,
    check_phi,
    concatenate,
)
from .waveform import render_waveform, train_to_csv, train_to_json, waveform_to_csv

__all__ = [
    "DEFAULT_SIGMA_FACTOR",
    "dual_sequence",
    "gaussian_envelope",
    "max_strength",
    "min_cycles",
    "shaped_sequence",
    "single_sequence",
    "uniform_phi",
    "DualCycle",
    "DualPulseSchedule",
    "PulseEvent",
    "PulseKind",
    "PulseShape",
    "PulseTrain",
    "Waveform",
    "check_phi",
    "concatenate",
    "render_waveform",
    "train_to_csv",
    "train_to_json",
    "waveform_to_csv",
]
