"""
Single-qubit Clifford group with XY-only decompositions.

Decompositions are listed in time order (first primitive applied first).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..core.errors import DomainError
from ..core.types import Unitary2
from ..twolevel.rotations import projectively_equal
from .primitives import PRIMITIVES

_POWER_NAMES = {
    ("X", 1.0): "X180",
    ("X", 0.5): "X90",
    ("X", -0.5): "mX90",
    ("Y", 1.0): "Y180",
    ("Y", 0.5): "Y90",
    ("Y", -0.5): "mY90",
}


@dataclass(frozen=True)
class CliffordElement:
    index: int
    decomposition: tuple[str, ...]
    matrix: Unitary2 = field(repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.decomposition)

    @property
    def is_identity(self) -> bool:
        return not self.decomposition


def _gates(*terms: tuple[str, float]) -> tuple[str, ...]:
    return tuple(_POWER_NAMES[(axis, power)] for axis, power in terms if power != 0)


def _decompositions() -> list[tuple[str, ...]]:
    out: list[tuple[str, ...]] = [()]
    for a, b in itertools.product([1.0, 0.5, -0.5], [0.0, 0.5, -0.5]):
        out.append(_gates(("X", a), ("Y", b)))
        out.append(_gates(("Y", a), ("X", b)))
    out.append(_gates(("Y", 1.0), ("X", 1.0)))
    for y0, x, y1 in ((-0.5, 0.5, 0.5), (-0.5, -0.5, 0.5), (0.5, 0.5, 0.5), (-0.5, 0.5, -0.5)):
        out.append(_gates(("Y", y0), ("X", x), ("Y", y1)))
    return out


def sequence_unitary(names: Sequence[str]) -> Unitary2:
    """Product of primitive unitaries applied in time order."""
    u = np.eye(2, dtype=complex)
    for name in names:
        u = PRIMITIVES[name].unitary @ u
    return u


@lru_cache(maxsize=1)
def clifford_table() -> tuple[CliffordElement, ...]:
    """The 24 elements; index 0 is the identity."""
    return tuple(
        CliffordElement(index=i, decomposition=d, matrix=sequence_unitary(d))
        for i, d in enumerate(_decompositions())
    )


def find_element(u: Unitary2, atol: float = 1e-10) -> CliffordElement:
    """Table element equal to u up to global phase."""
    for element in clifford_table():
        if projectively_equal(element.matrix, u, atol):
            return element
    raise DomainError("matrix is not a single-qubit Clifford")


def average_length() -> float:
    """Mean physical primitives per Clifford."""
    table = clifford_table()
    return sum(len(e) for e in table) / len(table)


def recovery_clifford(sequence: Sequence[CliffordElement]) -> CliffordElement:
    """Element undoing the ordered product of ``sequence`` (first element applied first)."""
    u = np.eye(2, dtype=complex)
    for element in sequence:
        u = element.matrix @ u
    return find_element(u.conj().T)
