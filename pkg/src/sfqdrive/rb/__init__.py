"""Randomized benchmarking of calibrated SFQ gates."""

from .fit import DecayFit, decay_model, error_per_clifford, fit_decay
from .protocol import MODES, RBConfig, RBResult, draw_sequence, job_rng, run_rb

__all__ = [
    "DecayFit",
    "decay_model",
    "error_per_clifford",
    "fit_decay",
    "MODES",
    "RBConfig",
    "RBResult",
    "draw_sequence",
    "job_rng",
    "run_rb",
]
