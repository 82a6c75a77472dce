"""
Physical Parameters

Constants, transmon/clock parameters and the capacitive coupling that sets
the per-pulse rotation angle.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Optional

from scipy import constants as _sc

from ..core.errors import DomainError

TWO_PI = 2.0 * math.pi

PHI_MIN = 0.0423 * math.pi
"""Lower edge of the dual-pulse generator's operating range at a 5 GHz clock."""

PHI_MAX = 0.958 * math.pi
"""Upper edge of the dual-pulse generator's operating range at a 5 GHz clock."""

COUPLING_RATIO_WARN = 0.1


class CouplingWarning(UserWarning):
    """Coupling capacitance is not small against the qubit capacitance."""


# ============================================================================
# Constants
# ============================================================================


@dataclass(frozen=True)
class PhysicalConstants:
    """Flux quantum and reduced Planck constant in SI units."""

    phi0: float = _sc.h / (2.0 * _sc.e)
    """Magnetic flux quantum h/2e, Wb."""

    hbar: float = _sc.hbar
    """Reduced Planck constant, J·s."""

    def __post_init__(self) -> None:
        if self.phi0 <= 0 or self.hbar <= 0:
            raise DomainError("physical constants must be strictly positive")


DEFAULT_CONSTANTS = PhysicalConstants()


# ============================================================================
# Qubit + clock
# ============================================================================


@dataclass(frozen=True)
class QubitParams:
    """
    Transmon and SFQ clock parameters; all angular quantities in rad/s.

    ``alpha`` is stored as a positive magnitude; the second excited level sits
    at 2·omega01 − alpha. ``clock_omega`` defaults to ``omega01`` (resonant
    drive).
    """

    omega01: float
    alpha: float
    delta_theta: float
    clock_omega: Optional[float] = None
    constants: PhysicalConstants = field(default=DEFAULT_CONSTANTS, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", abs(self.alpha))
        if self.clock_omega is None:
            object.__setattr__(self, "clock_omega", self.omega01)

    @classmethod
    def from_hz(
        cls,
        omega01_hz: float,
        alpha_hz: float,
        delta_theta: float,
        clock_hz: Optional[float] = None,
    ) -> QubitParams:
        """Build from ordinary frequencies (Hz)."""
        return cls(
            omega01=TWO_PI * omega01_hz,
            alpha=TWO_PI * alpha_hz,
            delta_theta=delta_theta,
            clock_omega=None if clock_hz is None else TWO_PI * clock_hz,
        )

    @property
    def omega12(self) -> float:
        """1–2 transition angular frequency."""
        return self.omega01 - self.alpha

    @property
    def period(self) -> float:
        """Clock period T = 2π/clock_omega, s."""
        return TWO_PI / float(self.clock_omega)  # type: ignore[arg-type]

    @property
    def levels(self) -> tuple[float, float, float]:
        """Three-level energies divided by ħ."""
        return (0.0, self.omega01, 2.0 * self.omega01 - self.alpha)

    def replace(self, **changes: float) -> QubitParams:
        values = {
            "omega01": self.omega01,
            "alpha": self.alpha,
            "delta_theta": self.delta_theta,
            "clock_omega": self.clock_omega,
        }
        values.update(changes)
        return QubitParams(constants=self.constants, **values)


PRESET_I = QubitParams.from_hz(5e9, 400e6, math.pi / 30)
"""Benchmarking parameter set I: δθ = π/30, 5 GHz, |α|/2π = 400 MHz."""

PRESET_II = QubitParams.from_hz(5e9, 450e6, math.pi / 60)
"""Benchmarking parameter set II: δθ = π/60, 5 GHz, |α|/2π = 450 MHz."""

PRESETS = {"I": PRESET_I, "II": PRESET_II}


def validate(params: QubitParams, allow_harmonic: bool = False) -> list[str]:
    """
    Return every violated invariant as a message; an empty list means ok.

    ``allow_harmonic`` admits alpha = 0 for callers that only read the 0–1 and
    1–2 frequencies, such as pulse-train builders and spectral sweeps.

    >>> validate(PRESET_I)
    []
    """
    problems: list[str] = []
    if not params.omega01 > 0:
        problems.append("omega01 > 0 required")
    if not (params.alpha > 0 or (allow_harmonic and params.alpha == 0)):
        problems.append("alpha > 0 required")
    if not params.alpha < params.omega01:
        problems.append("alpha < omega01 required")
    if not 0 < params.delta_theta < math.pi / 2:
        problems.append("delta_theta out of (0, π/2)")
    if not (params.clock_omega is not None and params.clock_omega > 0):
        problems.append("clock period must be positive")
    return problems


def ensure_valid(params: QubitParams, allow_harmonic: bool = False) -> QubitParams:
    """Raise DomainError listing all violations, otherwise return params."""
    problems = validate(params, allow_harmonic)
    if problems:
        raise DomainError("invalid qubit parameters: " + "; ".join(problems))
    return params


# ============================================================================
# Coupling
# ============================================================================


@dataclass(frozen=True)
class CouplingSpec:
    """Capacitive coupling of the SFQ driver to the qubit, farads."""

    c_coupling: float
    c_qubit: float

    def __post_init__(self) -> None:
        if self.c_qubit > 0 and self.c_coupling / self.c_qubit > COUPLING_RATIO_WARN:
            warnings.warn(
                f"C_C/C = {self.c_coupling / self.c_qubit:.3g} exceeds "
                f"{COUPLING_RATIO_WARN}; weak-coupling kick model is questionable",
                CouplingWarning,
                stacklevel=3,
            )


def delta_theta_from_circuit(
    coupling: CouplingSpec,
    omega01: float,
    constants: PhysicalConstants = DEFAULT_CONSTANTS,
) -> float:
    """
    Per-pulse rotation angle δθ = C_C·Φ₀·√(2ω₀₁/(ħC)).

    Zero coupling gives zero rotation; negative coupling or non-positive
    capacitance/frequency raise DomainError.
    """
    if coupling.c_coupling < 0:
        raise DomainError("c_coupling must be non-negative")
    if coupling.c_qubit <= 0:
        raise DomainError("c_qubit must be positive")
    if omega01 <= 0:
        raise DomainError("omega01 must be positive")
    return coupling.c_coupling * constants.phi0 * math.sqrt(
        2.0 * omega01 / (constants.hbar * coupling.c_qubit)
    )
