"""Core types, errors and export helpers for sfqdrive."""

from .errors import (
    CalibrationError,
    CompileError,
    ConfigError,
    DataError,
    DomainError,
    EmptyTrainError,
    EnvelopeError,
    ErrorCode,
    FitError,
    PulseRangeError,
    ResolutionError,
    SFQError,
)
from .export import format_value, write_csv, write_json
from .types import (
    State3,
    Unitary2,
    Unitary3,
    basis_state,
    complex_pairs,
    is_unitary,
    state_fidelity,
    unitarity_error,
)

__all__ = [
    "CalibrationError",
    "CompileError",
    "ConfigError",
    "DataError",
    "DomainError",
    "EmptyTrainError",
    "EnvelopeError",
    "ErrorCode",
    "FitError",
    "PulseRangeError",
    "ResolutionError",
    "SFQError",
    "format_value",
    "write_csv",
    "write_json",
    "State3",
    "Unitary2",
    "Unitary3",
    "basis_state",
    "complex_pairs",
    "is_unitary",
    "state_fidelity",
    "unitarity_error",
]
