"""
Leakage, gate fidelity and population read-outs.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import numpy as np
import numpy.typing as npt

from ..core.export import write_csv, write_json
from ..core.types import State3, Unitary2, Unitary3, basis_state, complex_pairs
from ..params.types import QubitParams
from ..pulsetrain.types import PulseTrain
from .kicks import TRANSMON, KickGenerator, kick_propagator, level_phases


def leakage(state: npt.ArrayLike) -> float:
    """Population of |2⟩."""
    return float(abs(np.asarray(state)[2]) ** 2)


def gate_fidelity(u_sim: Unitary3, u_target: Unitary2) -> float:
    """
    Average gate fidelity of the computational block with leakage counted:
    F = (Tr(M†M) + |Tr M|²)/6, M = u_target†·(P u_sim P).
    """
    block = np.asarray(u_sim, dtype=complex)[:2, :2]
    m = np.asarray(u_target, dtype=complex).conj().T @ block
    value = (np.trace(m.conj().T @ m).real + abs(np.trace(m)) ** 2) / 6.0
    return float(min(1.0, max(0.0, value)))


def population_series(
    train: PulseTrain,
    params: QubitParams,
    initial: Optional[State3] = None,
    generator: KickGenerator = TRANSMON,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Level populations right after every pulse.

    Returns ``(times, populations)`` with populations shaped (n_events, 3).
    Free evolution does not change populations, so these are exact.
    """
    psi = basis_state(0) if initial is None else np.asarray(initial, dtype=complex)
    times = train.times
    pops = np.empty((times.size, 3))
    now = float(times[0]) if times.size else 0.0
    phi0 = params.constants.phi0
    for i, event in enumerate(train.events):
        psi = level_phases(event.time - now, params) * psi
        psi = kick_propagator(params.delta_theta * event.polarity * event.area / phi0,
                              generator) @ psi
        pops[i] = np.abs(psi) ** 2
        now = event.time
    return times, pops


def populations_to_csv(times: np.ndarray, populations: np.ndarray, path: str | Path) -> Path:
    rows = ((t, *p) for t, p in zip(times, populations))
    return write_csv(path, ["t_s", "p0", "p1", "p2"], rows)


def propagator_to_json(u: npt.ArrayLike, path: str | Path, **meta: object) -> Path:
    return write_json(path, {"propagator": complex_pairs(u), **meta})


def state_to_json(state: npt.ArrayLike, path: str | Path, **meta: object) -> Path:
    return write_json(path, {"state": complex_pairs(state), **meta})
