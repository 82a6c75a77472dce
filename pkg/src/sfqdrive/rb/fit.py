"""
Decay fitting for randomized benchmarking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.optimize import curve_fit

from ..core.errors import DomainError, FitError

_TOL = 1e-14


@dataclass(frozen=True)
class DecayFit:
    """V(N) = A·p^N + B."""

    a: float
    b: float
    p: float
    residual_norm: float

    @property
    def epc(self) -> float:
        return error_per_clifford(self.p)

    def to_dict(self) -> dict:
        return {"A": self.a, "B": self.b, "p": self.p, "residual_norm": self.residual_norm,
                "epc": self.epc}


def decay_model(n: np.ndarray, a: float, b: float, p: float) -> np.ndarray:
    return a * np.power(p, n) + b


def _initial_p(lengths: np.ndarray, visibilities: np.ndarray, b0: float) -> float:
    excess = visibilities - b0
    keep = excess > 0
    if np.count_nonzero(keep) < 2:
        return 0.99
    slope, _ = np.polyfit(lengths[keep], np.log(excess[keep]), 1)
    return float(np.clip(np.exp(slope), 1e-6, 1.0))


def fit_decay(lengths: Sequence[float], mean_visibilities: Sequence[float]) -> DecayFit:
    """
    Least-squares fit of A·p^N + B.

    Starts from A₀ = V(first) − V(last), B₀ = V(last) and p₀ from a log-linear
    fit of V − B₀. Flat data raise FitError: p is then indeterminate
    (consistent with p = 1).
    """
    n = np.asarray(lengths, dtype=float)
    v = np.asarray(mean_visibilities, dtype=float)
    if n.shape != v.shape:
        raise FitError("lengths and visibilities differ in size")
    if np.unique(n).size < 3:
        raise FitError("need at least 3 distinct sequence lengths")
    if np.ptp(v) < 1e-12:
        raise FitError("visibilities are constant; p is indeterminate (suggests p = 1)")
    order = np.argsort(n)
    n, v = n[order], v[order]
    a0, b0 = v[0] - v[-1], v[-1]
    guess = (a0, b0, _initial_p(n, v, b0))
    try:
        popt, _ = curve_fit(decay_model, n, v, p0=guess, ftol=_TOL, xtol=_TOL, gtol=_TOL,
                            maxfev=20000)
    except RuntimeError as e:
        raise FitError(f"decay fit did not converge: {e}") from e
    a, b, p = (float(x) for x in popt)
    if not 0.0 < p <= 1.0:
        raise FitError(f"fitted p = {p:.9g} outside (0, 1]")
    residual = float(np.linalg.norm(decay_model(n, a, b, p) - v))
    return DecayFit(a=a, b=b, p=p, residual_norm=residual)


def error_per_clifford(p: float) -> float:
    """(1 − p)/2 for a single qubit."""
    if not 0.0 < p <= 1.0:
        raise DomainError(f"decay p must lie in (0, 1], got {p!r}")
    return (1.0 - p) / 2.0
