"""
sfqdrive Core Types

Array aliases and small linear-algebra helpers shared by every engine.
"""

from __future__ import annotations

from typing import Any

import numpy as np
import numpy.typing as npt

Unitary2 = npt.NDArray[np.complex128]
"""2×2 complex propagator (qubit subspace)."""

Unitary3 = npt.NDArray[np.complex128]
"""3×3 complex propagator (|0⟩, |1⟩, |2⟩)."""

State3 = npt.NDArray[np.complex128]
"""Three complex amplitudes for |0⟩, |1⟩, |2⟩."""


def unitarity_error(u: npt.ArrayLike) -> float:
    """Max-entry deviation of U†U from the identity."""
    m = np.asarray(u, dtype=complex)
    return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))


def is_unitary(u: npt.ArrayLike, atol: float = 1e-10) -> bool:
    return unitarity_error(u) <= atol


def basis_state(level: int, dim: int = 3) -> State3:
    """Computational basis vector |level⟩."""
    psi = np.zeros(dim, dtype=complex)
    psi[level] = 1.0
    return psi


def state_fidelity(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """|⟨a|b⟩|² for pure states."""
    return float(abs(np.vdot(np.asarray(a), np.asarray(b))) ** 2)


def complex_pairs(values: Any) -> Any:
    """Convert a complex array into nested [re, im] lists for JSON."""
    arr = np.asarray(values, dtype=complex)
    if arr.ndim == 0:
        return [float(arr.real), float(arr.imag)]
    return [complex_pairs(v) for v in arr]
