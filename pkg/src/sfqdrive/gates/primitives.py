"""
Primitive Rotations

Physical xy-plane rotations and virtual z turns that Clifford elements are
built from. Axis phase ψ follows n(ψ) = (−sin ψ, cos ψ, 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..core.types import Unitary2
from ..twolevel.rotations import rotation_xy, rotation_z

HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class Primitive:
    name: str
    angle: float
    axis_phase: float = 0.0
    virtual: bool = False

    @property
    def unitary(self) -> Unitary2:
        if self.virtual:
            return rotation_z(self.angle)
        return rotation_xy(self.angle, self.axis_phase)


PRIMITIVES: dict[str, Primitive] = {
    p.name: p
    for p in (
        Primitive("X90", HALF_PI, -HALF_PI),
        Primitive("X180", math.pi, -HALF_PI),
        Primitive("mX90", HALF_PI, HALF_PI),
        Primitive("Y90", HALF_PI, 0.0),
        Primitive("Y180", math.pi, 0.0),
        Primitive("mY90", HALF_PI, math.pi),
        Primitive("Z90", HALF_PI, virtual=True),
        Primitive("mZ90", -HALF_PI, virtual=True),
        Primitive("Z180", math.pi, virtual=True),
    )
}

PHYSICAL = tuple(name for name, p in PRIMITIVES.items() if not p.virtual)
