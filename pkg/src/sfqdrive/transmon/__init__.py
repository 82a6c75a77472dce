"""Three-level transmon propagation and gate metrics."""

from .kicks import (
    KICK_SCALE,
    TRANSMON,
    TWO_LEVEL,
    KickGenerator,
    evolve_kicks,
    free_propagator,
    gate_propagator,
    kick_propagator,
    to_rotating_frame,
)
from .metrics import (
    gate_fidelity,
    leakage,
    population_series,
    populations_to_csv,
    propagator_to_json,
    state_to_json,
)
from .waveform import check_resolution, evolve_waveform

__all__ = [
    "KICK_SCALE",
    "TRANSMON",
    "TWO_LEVEL",
    "KickGenerator",
    "evolve_kicks",
    "free_propagator",
    "gate_propagator",
    "kick_propagator",
    "to_rotating_frame",
    "gate_fidelity",
    "leakage",
    "population_series",
    "populations_to_csv",
    "propagator_to_json",
    "state_to_json",
    "check_resolution",
    "evolve_waveform",
]
