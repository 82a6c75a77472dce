"""
Leakage-ratio sweeps over calibrated π trains.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from ..core.export import write_csv
from ..params.types import QubitParams, ensure_valid
from ..pulsetrain.builders import (
    DEFAULT_SIGMA_FACTOR,
    dual_sequence,
    gaussian_envelope,
    min_cycles,
    shaped_sequence,
    single_sequence,
    uniform_phi,
)
from ..pulsetrain.types import PulseShape
from .phasor import band_leakage_ratio, leakage_ratio

logger = logging.getLogger("sfqdrive")


@dataclass(frozen=True)
class LeakageRow:
    """One sweep point; ``n_cycles`` is 0 and ``ratio`` NaN when infeasible."""

    two_phi: float
    n_cycles: int
    phi: float
    ratio: float
    warning: str = ""


def single_baseline(
    params: QubitParams, total_angle: float = math.pi, shape: PulseShape | None = None
) -> float:
    """Leakage ratio of the single-pulse train closest to ``total_angle``."""
    n = max(1, round(total_angle / params.delta_theta))
    return leakage_ratio(single_sequence(n, params), params, shape)


def leakage_sweep(
    phi_grid: Sequence[float],
    params: QubitParams,
    total_angle: float = math.pi,
    max_cycles: int = 2000,
    shape: PulseShape | None = None,
    hardware_constrained: bool = False,
) -> list[LeakageRow]:
    """
    Leakage ratio of uniform dual trains calibrated to ``total_angle``.

    For each nominal φ the cycle count is n = round(Θ/(2|cos φ|δθ)), raised to
    the feasible minimum, and φ is then re-solved so the train rotates by
    exactly Θ. Points needing more than ``max_cycles`` give a NaN row.
    """
    ensure_valid(params, allow_harmonic=True)
    dtheta = params.delta_theta
    floor = min_cycles(total_angle, dtheta, hardware_constrained)
    rows: list[LeakageRow] = []
    for phi in phi_grid:
        c = math.cos(phi)
        if abs(c) * 2.0 * dtheta * max_cycles < total_angle:
            logger.warning("2phi=%.4fπ needs more than %d cycles; skipped",
                           2.0 * phi / math.pi, max_cycles)
            rows.append(LeakageRow(2.0 * phi, 0, phi, math.nan, "needs more than max_cycles"))
            continue
        n = max(floor, round(total_angle / (2.0 * abs(c) * dtheta)))
        if n > max_cycles:
            logger.warning("2phi=%.4fπ needs %d > %d cycles; skipped",
                           2.0 * phi / math.pi, n, max_cycles)
            rows.append(LeakageRow(2.0 * phi, 0, phi, math.nan, "needs more than max_cycles"))
            continue
        calibrated = uniform_phi(n, math.copysign(total_angle, c), dtheta)
        _, train = dual_sequence(n, calibrated, 0.0, params, hardware_constrained)
        rows.append(LeakageRow(2.0 * phi, n, calibrated, leakage_ratio(train, params, shape)))
    return rows


@dataclass(frozen=True)
class EnvelopeRow:
    """
    Point ratios at ω₁₂ and band peaks over ω₁₂ ± π/t_gate.

    A rectangle gate whose length is a whole number of ω₁₂ periods sits on a
    comb null, so ``ratio_rect`` is 0 there; the band columns do not null.
    """

    t_gate: float
    n_cycles: int
    ratio_rect: float
    ratio_gauss: float
    band_rect: float = math.nan
    band_gauss: float = math.nan


def envelope_comparison(
    gate_lengths: Iterable[float],
    params: QubitParams,
    total_angle: float = math.pi,
    sigma_factor: float = DEFAULT_SIGMA_FACTOR,
    shape: PulseShape | None = None,
    hardware_constrained: bool = False,
) -> list[EnvelopeRow]:
    """
    Rectangle against Gaussian strength envelopes for π gates of given length.

    Each length is rounded to whole clock cycles; envelope realizability
    errors propagate.
    """
    ensure_valid(params, allow_harmonic=True)
    rows: list[EnvelopeRow] = []
    for t_gate in gate_lengths:
        n = max(1, round(t_gate / params.period))
        rect = np.full(n, total_angle / n)
        gauss = gaussian_envelope(
            n, total_angle, sigma_factor, params.delta_theta, hardware_constrained
        )
        _, rect_train = shaped_sequence(rect, 0.0, params, hardware_constrained)
        _, gauss_train = shaped_sequence(gauss, 0.0, params, hardware_constrained)
        cap = params.alpha if params.alpha > 0 else params.omega12
        half_width = min(math.pi / (n * params.period), 0.5 * cap)
        rows.append(
            EnvelopeRow(
                t_gate=n * params.period,
                n_cycles=n,
                ratio_rect=leakage_ratio(rect_train, params, shape),
                ratio_gauss=leakage_ratio(gauss_train, params, shape),
                band_rect=band_leakage_ratio(rect_train, params, half_width, shape),
                band_gauss=band_leakage_ratio(gauss_train, params, half_width, shape),
            )
        )
        logger.debug("envelope t_gate=%.3g s: rect=%.4g gauss=%.4g", rows[-1].t_gate,
                     rows[-1].ratio_rect, rows[-1].ratio_gauss)
    return rows


def leakage_rows_to_csv(
    rows: Sequence[LeakageRow], path: str | Path, title: Optional[str] = None
) -> Path:
    return write_csv(
        path,
        ["two_phi_rad", "n_cycles", "phi_rad", "ratio", "warning"],
        ((r.two_phi, r.n_cycles, r.phi, r.ratio, r.warning) for r in rows),
        title,
    )


def envelope_rows_to_csv(
    rows: Sequence[EnvelopeRow], path: str | Path, title: Optional[str] = None
) -> Path:
    return write_csv(
        path,
        ["t_gate_s", "n_cycles", "ratio_rect", "ratio_gauss", "band_rect", "band_gauss"],
        (
            (r.t_gate, r.n_cycles, r.ratio_rect, r.ratio_gauss, r.band_rect, r.band_gauss)
            for r in rows
        ),
        title,
    )
