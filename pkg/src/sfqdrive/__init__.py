"""
sfqdrive: dual-SFQ-pulse drive simulation for transmon qubits.

Pulse-train construction, two- and three-level propagation, spectral leakage
analysis, gate calibration and randomized benchmarking.
"""

__version__ = "0.1.0"

from .core.errors import ErrorCode, SFQError
from .gates import CalibrationStore, calibrate_coarse, calibrate_fine, clifford_table
from .params import PRESET_I, PRESET_II, QubitParams, load_config
from .pulsetrain import PulseShape, PulseTrain, dual_sequence, single_sequence
from .rb import RBConfig, RBResult, run_rb
from .spectrum import leakage_ratio, spectral_component, tuning_curve
from .transmon import evolve_kicks, gate_fidelity, leakage
from .twolevel import cycle_unitary_exact, effective_delta_theta

__all__ = [
    "__version__",
    "ErrorCode",
    "SFQError",
    "CalibrationStore",
    "calibrate_coarse",
    "calibrate_fine",
    "clifford_table",
    "PRESET_I",
    "PRESET_II",
    "QubitParams",
    "load_config",
    "PulseShape",
    "PulseTrain",
    "dual_sequence",
    "single_sequence",
    "RBConfig",
    "RBResult",
    "run_rb",
    "leakage_ratio",
    "spectral_component",
    "tuning_curve",
    "evolve_kicks",
    "gate_fidelity",
    "leakage",
    "cycle_unitary_exact",
    "effective_delta_theta",
]
