"""
Calibration Store

Registry of calibrated primitives keyed by name, with JSON persistence.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Iterable, Iterator, Optional

from ..core.errors import CalibrationError, ConfigError
from ..core.export import write_json
from ..params.types import QubitParams
from ..transmon.kicks import TRANSMON, KickGenerator
from .calibration import (
    CalibratedGate,
    calibrate_coarse,
    calibrate_fine,
    calibrate_single,
    suggest_cycle_count,
)
from .primitives import PHYSICAL, PRIMITIVES

logger = logging.getLogger("sfqdrive")

DEFAULT_CYCLE_SPAN = (6, 8)


class CalibrationStore:
    """Calibrated gates per primitive name."""

    def __init__(self, gates: Iterable[CalibratedGate] = ()) -> None:
        self._gates: dict[str, CalibratedGate] = {}
        for gate in gates:
            self.register(gate)

    def register(self, gate: CalibratedGate) -> CalibratedGate:
        if gate.name not in PRIMITIVES or PRIMITIVES[gate.name].virtual:
            raise CalibrationError(f"not a physical primitive: {gate.name!r}")
        self._gates[gate.name] = gate
        return gate

    def unregister(self, name: str) -> bool:
        """Remove a calibration. Returns True if it existed."""
        return self._gates.pop(name, None) is not None

    def get(self, name: str) -> Optional[CalibratedGate]:
        return self._gates.get(name)

    def list_gates(self) -> list[CalibratedGate]:
        return list(self._gates.values())

    def missing(self, names: Iterable[str] = PHYSICAL) -> list[str]:
        return [n for n in names if n not in self._gates]

    def __len__(self) -> int:
        return len(self._gates)

    def __contains__(self, name: str) -> bool:
        return name in self._gates

    def __iter__(self) -> Iterator[CalibratedGate]:
        return iter(self._gates.values())

    def to_dict(self) -> dict:
        return {name: gate.to_dict() for name, gate in sorted(self._gates.items())}

    def save(self, path: str | Path) -> Path:
        return write_json(path, self.to_dict())

    @classmethod
    def load(cls, path: str | Path) -> CalibrationStore:
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read calibration store {path}: {e}") from e
        try:
            return cls(CalibratedGate.from_dict(name, entry) for name, entry in data.items())
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError(f"malformed calibration store {path}: {e}") from e


def calibrate_all(
    params: QubitParams,
    mode: str = "dual-fine",
    n_cycles: Optional[int] = None,
    hardware_constrained: bool = False,
    generator: KickGenerator = TRANSMON,
) -> CalibrationStore:
    """
    Calibrate every physical primitive for one RB mode.

    Dual modes share ``n_cycles`` across primitives, so π/2 gates run at a
    larger φ. Without ``n_cycles`` the count is the ω₁₂ comb null found by
    ``suggest_cycle_count`` over ``DEFAULT_CYCLE_SPAN`` times the π gate's
    minimum, which keeps every primitive near φ = π/2 where the 1–2 drive
    of a pair is small.
    """
    store = CalibrationStore()
    if mode == "single-pulse":
        for name in PHYSICAL:
            p = PRIMITIVES[name]
            store.register(calibrate_single(p.angle, params, p.axis_phase, name))
        return store
    if mode not in ("dual-coarse", "dual-fine"):
        raise ConfigError(f"unknown calibration mode {mode!r}")
    n = n_cycles or suggest_cycle_count(
        params, PRIMITIVES["X180"].angle, hardware_constrained, DEFAULT_CYCLE_SPAN
    )
    for name in PHYSICAL:
        p = PRIMITIVES[name]
        gate = calibrate_coarse(p.angle, n, params, hardware_constrained, p.axis_phase, name)
        if mode == "dual-fine":
            gate = calibrate_fine(gate, params, generator)
        store.register(gate)
    logger.info("calibrated %d primitives (%s, n=%d)", len(store), mode, n)
    return store
