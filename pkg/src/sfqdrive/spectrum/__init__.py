"""Phasor-sum spectra of pulse trains and leakage-ratio sweeps."""

from .phasor import (
    SpectralQuery,
    TuningCurve,
    band_leakage_ratio,
    default_phi_grid,
    leakage_ratio,
    phasor_sum,
    spectral_component,
    tuning_curve,
)
from .sweeps import (
    EnvelopeRow,
    LeakageRow,
    envelope_comparison,
    envelope_rows_to_csv,
    leakage_rows_to_csv,
    leakage_sweep,
    single_baseline,
)

__all__ = [
    "SpectralQuery",
    "TuningCurve",
    "band_leakage_ratio",
    "default_phi_grid",
    "leakage_ratio",
    "phasor_sum",
    "spectral_component",
    "tuning_curve",
    "EnvelopeRow",
    "LeakageRow",
    "envelope_comparison",
    "envelope_rows_to_csv",
    "leakage_rows_to_csv",
    "leakage_sweep",
    "single_baseline",
]
