"""
sfqdrive Errors

Every failure raised by the library is an SFQError carrying a stable code.
"""

from __future__ import annotations

from enum import Enum
from typing import Optional


class ErrorCode(str, Enum):
    DOMAIN = "DOMAIN"
    EMPTY_TRAIN = "EMPTY_TRAIN"
    PULSE_RANGE = "PULSE_RANGE"
    ENVELOPE = "ENVELOPE"
    RESOLUTION = "RESOLUTION"
    DATA = "DATA"
    CALIBRATION = "CALIBRATION"
    COMPILE = "COMPILE"
    FIT = "FIT"
    CONFIG = "CONFIG"


class SFQError(Exception):
    """Base error for simulation, calibration and benchmarking failures."""

    code: ErrorCode = ErrorCode.DOMAIN

    def __init__(self, message: str, code: Optional[ErrorCode] = None):
        if code is not None:
            self.code = code
        self.message = message
        super().__init__(f"[{self.code.value}] {message}")

    def to_dict(self) -> dict[str, str]:
        return {"error": self.code.value, "message": self.message}


class DomainError(SFQError):
    code = ErrorCode.DOMAIN


class EmptyTrainError(SFQError):
    code = ErrorCode.EMPTY_TRAIN


class PulseRangeError(SFQError):
    """A dual-pulse half-interval phase lies outside the allowed range."""

    code = ErrorCode.PULSE_RANGE

    def __init__(self, message: str, bound: float):
        self.bound = bound
        super().__init__(message)


class EnvelopeError(SFQError):
    """Requested per-cycle strength exceeds what a dual pair can deliver."""

    code = ErrorCode.ENVELOPE

    def __init__(self, message: str, required: float, available: float):
        self.required = required
        self.available = available
        super().__init__(message)


class ResolutionError(SFQError):
    code = ErrorCode.RESOLUTION


class DataError(SFQError):
    code = ErrorCode.DATA


class CalibrationError(SFQError):
    """Target rotation not reachable with the requested cycle count."""

    code = ErrorCode.CALIBRATION

    def __init__(self, message: str, min_cycles: Optional[int] = None):
        self.min_cycles = min_cycles
        super().__init__(message)


class CompileError(SFQError):
    code = ErrorCode.COMPILE


class FitError(SFQError):
    code = ErrorCode.FIT


class ConfigError(SFQError):
    code = ErrorCode.CONFIG
