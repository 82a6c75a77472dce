"""
Reference Checks

Deliberately naive recomputations of the engine's key quantities by
independent algorithms, reported as OracleReport records. Run them with the
hidden ``sfqdrive verify`` subcommand.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np
from scipy import fft

from .core.types import unitarity_error
from .params.types import PRESET_I, QubitParams
from .pulsetrain.types import PulseShape, PulseTrain, Waveform
from .pulsetrain.waveform import render_waveform


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    value: float
    reference: float
    abs_deviation: float
    rel_deviation: float
    tolerance: float
    passed: bool

    @classmethod
    def compare(
        cls, quantity: str, value: float, reference: float, tolerance: float,
        relative: bool = False,
    ) -> OracleReport:
        dev = abs(value - reference)
        rel = dev / abs(reference) if reference else (0.0 if dev == 0 else math.inf)
        return cls(quantity, float(value), float(reference), float(dev), float(rel),
                   tolerance, bool((rel if relative else dev) <= tolerance))

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


# ============================================================================
# Matrix exponential
# ============================================================================


def matrix_exp_reference(generator: np.ndarray, terms: int = 30) -> np.ndarray:
    """Taylor series after scaling by 2^s, then s squarings."""
    a = np.asarray(generator, dtype=complex)
    norm = float(np.max(np.sum(np.abs(a), axis=1))) if a.size else 0.0
    s = max(0, int(math.ceil(math.log2(norm))) + 1) if norm > 0.5 else 0
    a = a / (2**s)
    result = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, terms + 1):
        term = term @ a / k
        result = result + term
    for _ in range(s):
        result = result @ result
    return result


# ============================================================================
# Per-cycle product
# ============================================================================


def _rz(theta: float) -> list[list[complex]]:
    return [[cmath.exp(-0.5j * theta), 0], [0, cmath.exp(0.5j * theta)]]


def _ry(theta: float) -> list[list[complex]]:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return [[c, -s], [s, c]]


def _mul(a: list[list[complex]], b: list[list[complex]]) -> list[list[complex]]:
    return [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]


def cycle_product_reference(delta_theta: float, phi: float) -> np.ndarray:
    """Literal five-factor product in plain complex arithmetic."""
    u = _rz(phi)
    for factor in (_ry(delta_theta), _rz(2 * math.pi - 2 * phi), _ry(delta_theta), _rz(phi)):
        u = _mul(u, factor)
    return np.array(u, dtype=complex)


# ============================================================================
# FFT spectrum
# ============================================================================


def fft_spectrum_reference(waveform: Waveform, omega: float, phi0: float) -> float:
    """
    |∫V(t)e^{−iωt}dt|/Φ₀ from a zero-padded FFT whose length puts ω on a bin;
    the residual sub-bin offset is interpolated linearly.
    """
    dt = waveform.sample_interval
    n0 = 8 * len(waveform)
    bins_per_omega = dt / (2.0 * math.pi)
    m = int(math.ceil(n0 * omega * bins_per_omega))
    n_fft = int(round(m / (omega * bins_per_omega)))
    spectrum = fft.fft(waveform.samples, n=n_fft)
    position = omega * n_fft * bins_per_omega
    k = int(math.floor(position))
    frac = position - k
    value = (1.0 - frac) * spectrum[k] + frac * spectrum[k + 1]
    return float(abs(dt * value) / phi0)


# ============================================================================
# Clifford closure
# ============================================================================


def _canonical(u: np.ndarray) -> tuple:
    flat = u.flatten()
    pivot = flat[np.argmax(np.abs(flat) > 1e-9)]
    v = flat * (abs(pivot) / pivot)
    return tuple(np.round(v.real, 8) + 0.0) + tuple(np.round(v.imag, 8) + 0.0)


def clifford_closure_reference() -> tuple[int, list[np.ndarray]]:
    """Breadth-first closure of ⟨X(π/2), Y(π/2)⟩ up to global phase."""
    r = 1 / math.sqrt(2)
    gens = [
        np.array([[r, -1j * r], [-1j * r, r]]),
        np.array([[r, -r], [r, r]], dtype=complex),
    ]
    seen = {_canonical(np.eye(2, dtype=complex)): np.eye(2, dtype=complex)}
    frontier = list(seen.values())
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                w = g @ u
                key = _canonical(w)
                if key not in seen:
                    seen[key] = w
                    nxt.append(w)
        frontier = nxt
    return len(seen), list(seen.values())


# ============================================================================
# Waveform step halving
# ============================================================================


def step_halving_reference(
    train: PulseTrain,
    params: QubitParams,
    shape: PulseShape,
    sample_rate: float,
) -> tuple[np.ndarray, np.ndarray]:
    """Final states at ``sample_rate`` and at twice that rate over the same span."""
    from .transmon.waveform import evolve_waveform

    coarse = render_waveform(train, shape, sample_rate)
    fine = render_waveform(train, shape, 2.0 * sample_rate)
    return (
        evolve_waveform(coarse, params, fwhm=shape.fwhm),
        evolve_waveform(fine, params, fwhm=shape.fwhm),
    )


# ============================================================================
# Suite
# ============================================================================


def _check_kick(params: QubitParams) -> OracleReport:
    from .transmon.kicks import KICK_SCALE, TRANSMON, kick_propagator

    primary = kick_propagator(params.delta_theta)
    ref = matrix_exp_reference(KICK_SCALE * params.delta_theta * TRANSMON.matrix)
    return OracleReport.compare("kick_propagator", float(np.max(np.abs(primary - ref))), 0.0,
                                1e-12)


def _check_cycle(params: QubitParams) -> OracleReport:
    from .twolevel.rotations import cycle_unitary_closed_form

    ref = cycle_product_reference(math.pi / 30, math.pi / 4)
    dev = float(np.max(np.abs(cycle_unitary_closed_form(math.pi / 30, math.pi / 4) - ref)))
    return OracleReport.compare("cycle_unitary_closed_form", dev, 0.0, 1e-12)


def _check_spectrum(params: QubitParams) -> OracleReport:
    from .pulsetrain.builders import dual_sequence
    from .spectrum.phasor import phasor_sum

    shape = PulseShape.gaussian(2e-12)
    _, train = dual_sequence(10, math.pi / 3, 0.0, params)
    wf = render_waveform(train, shape, 5e12)
    primary = abs(phasor_sum(train, params.omega01, shape))
    ref = fft_spectrum_reference(wf, params.omega01, params.constants.phi0)
    return OracleReport.compare("spectral_component", primary, ref, 1e-3, relative=True)


def _check_clifford(params: QubitParams) -> OracleReport:
    from .gates.clifford import clifford_table

    count, _ = clifford_closure_reference()
    return OracleReport.compare("clifford_table_size", len(clifford_table()), count, 0.0)


def _check_waveform(params: QubitParams) -> OracleReport:
    from .pulsetrain.builders import single_sequence

    coarse, fine = step_halving_reference(
        single_sequence(3, params), params, PulseShape.gaussian(2e-12), 5e12
    )
    fidelity = abs(np.vdot(coarse, fine)) ** 2
    return OracleReport.compare("evolve_waveform_step_halving", fidelity, 1.0, 1e-6)


def _check_unitarity(params: QubitParams) -> OracleReport:
    from .pulsetrain.builders import single_sequence
    from .transmon.kicks import evolve_kicks

    _, u = evolve_kicks(single_sequence(1000, params), params)
    return OracleReport.compare("evolve_kicks_unitarity", unitarity_error(u), 0.0, 1e-10)


CHECKS: tuple[Callable[[QubitParams], OracleReport], ...] = (
    _check_kick,
    _check_cycle,
    _check_spectrum,
    _check_clifford,
    _check_waveform,
    _check_unitarity,
)


def run_all(params: QubitParams = PRESET_I) -> list[OracleReport]:
    return [check(params) for check in CHECKS]
