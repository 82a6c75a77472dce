"""
Clifford Compiler

Lays calibrated primitive trains end to end on a contiguous clock-cycle
grid. Virtual z turns only move the frame: Z(θ) sets frame ← frame − θ and
every later physical primitive rotates about its nominal axis plus the frame,
which shifts its pulse-pair centers by (ψ + frame)/ω₀₁ within the cycle.
A fine-calibrated gate also advances the frame by ``frame_pre`` before its
train and by ``frame_post`` after it, cancelling its z-type error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..core.errors import CompileError
from ..params.types import TWO_PI, QubitParams
from ..pulsetrain.types import PulseEvent, PulseTrain
from .clifford import CliffordElement
from .primitives import PRIMITIVES
from .store import CalibrationStore


@dataclass(frozen=True)
class Frame:
    """Accumulated virtual-z frame angle, kept in [0, 2π)."""

    angle: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "angle", self.angle % TWO_PI)

    def turned(self, theta: float) -> Frame:
        return Frame(self.angle - theta)


@dataclass
class _Assembler:
    params: QubitParams
    calibrations: CalibrationStore
    frame: Frame = field(default_factory=Frame)
    cycle: int = 0
    last_time: float = -math.inf
    events: list[PulseEvent] = field(default_factory=list)

    def add(self, name: str) -> None:
        primitive = PRIMITIVES.get(name)
        if primitive is None:
            raise CompileError(f"unknown primitive {name!r}")
        if primitive.virtual:
            self.frame = self.frame.turned(primitive.angle)
            return
        gate = self.calibrations.get(name)
        if gate is None:
            raise CompileError(f"no calibration for primitive {name!r}")
        self.frame = self.frame.turned(-gate.frame_pre)
        local = gate.train(self.params, gate.axis_phase + self.frame.angle)
        period = self.params.period
        if local.times[0] + self.cycle * period <= self.last_time:
            self.cycle += 1
        placed = local.shifted(self.cycle * period)
        self.events.extend(placed.events)
        self.cycle += local.cycles
        self.last_time = float(placed.times[-1])
        self.frame = self.frame.turned(-gate.frame_post)

    def train(self) -> PulseTrain:
        return PulseTrain(events=tuple(self.events), clock_period=self.params.period,
                          cycles=self.cycle)


def compile_primitives(
    names: Iterable[str],
    calibrations: CalibrationStore,
    params: QubitParams,
    frame: Frame = Frame(),
) -> tuple[PulseTrain, Frame]:
    """Compile primitive names in time order."""
    asm = _Assembler(params, calibrations, frame)
    for name in names:
        asm.add(name)
    return asm.train(), asm.frame


def compile_clifford(
    element: CliffordElement,
    calibrations: CalibrationStore,
    params: QubitParams,
    frame: Frame = Frame(),
) -> tuple[PulseTrain, Frame]:
    return compile_primitives(element.decomposition, calibrations, params, frame)


def compile_sequence(
    elements: Sequence[CliffordElement],
    calibrations: CalibrationStore,
    params: QubitParams,
    frame: Frame = Frame(),
) -> tuple[PulseTrain, Frame]:
    """One contiguous train for a whole Clifford sequence."""
    names = [name for element in elements for name in element.decomposition]
    return compile_primitives(names, calibrations, params, frame)
