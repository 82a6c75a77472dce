"""Physical parameters, constants and run configuration."""

from .config import RunConfig, load_config
from .types import (
    DEFAULT_CONSTANTS,
    PHI_MAX,
    PHI_MIN,
    PRESETS,
    PRESET_I,
    PRESET_II,
    TWO_PI,
    CouplingSpec,
    CouplingWarning,
    PhysicalConstants,
    QubitParams,
    delta_theta_from_circuit,
    ensure_valid,
    validate,
)

__all__ = [
    "RunConfig",
    "load_config",
    "DEFAULT_CONSTANTS",
    "PHI_MAX",
    "PHI_MIN",
    "PRESETS",
    "PRESET_I",
    "PRESET_II",
    "TWO_PI",
    "CouplingSpec",
    "CouplingWarning",
    "PhysicalConstants",
    "QubitParams",
    "delta_theta_from_circuit",
    "ensure_valid",
    "validate",
]
