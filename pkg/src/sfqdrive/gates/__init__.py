"""Clifford group, dual-pulse gate calibration and compilation."""

from .calibration import (
    FINE_WINDOW,
    CalibratedGate,
    Scheme,
    calibrate_coarse,
    calibrate_fine,
    calibrate_single,
    evaluate_gate,
    phi_bounds,
    simulate_gate,
    suggest_cycle_count,
)
from .clifford import (
    CliffordElement,
    average_length,
    clifford_table,
    find_element,
    recovery_clifford,
    sequence_unitary,
)
from .compiler import Frame, compile_clifford, compile_primitives, compile_sequence
from .primitives import PHYSICAL, PRIMITIVES, Primitive
from .store import CalibrationStore, calibrate_all

__all__ = [
    "FINE_WINDOW",
    "CalibratedGate",
    "Scheme",
    "calibrate_coarse",
    "calibrate_fine",
    "calibrate_single",
    "evaluate_gate",
    "phi_bounds",
    "simulate_gate",
    "suggest_cycle_count",
    "CliffordElement",
    "average_length",
    "clifford_table",
    "find_element",
    "recovery_clifford",
    "sequence_unitary",
    "Frame",
    "compile_clifford",
    "compile_primitives",
    "compile_sequence",
    "PHYSICAL",
    "PRIMITIVES",
    "Primitive",
    "CalibrationStore",
    "calibrate_all",
]
