"""
Randomized Benchmarking

Random Clifford sequences with a recovery element, compiled into one pulse
train and evolved from |0⟩. Every (length, repetition) job draws from its own
child stream SeedSequence(seed, spawn_key=(length_index, repetition)), so
threaded and serial runs give identical results.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from ..core.errors import ConfigError, FitError
from ..core.export import write_csv, write_json
from ..core.types import basis_state
from ..gates.clifford import CliffordElement, clifford_table, recovery_clifford
from ..gates.compiler import compile_sequence
from ..gates.store import CalibrationStore, calibrate_all
from ..params.types import QubitParams, ensure_valid
from ..transmon.kicks import TRANSMON, TWO_LEVEL, KickGenerator, evolve_kicks
from .fit import DecayFit, fit_decay

logger = logging.getLogger("sfqdrive")

MODES = ("single-pulse", "dual-coarse", "dual-fine", "ideal")


@dataclass(frozen=True)
class RBConfig:
    params: QubitParams
    sequence_lengths: tuple[int, ...] = (2, 4, 8, 16, 32, 64, 128)
    n_random: int = 100
    seed: int = 0
    mode: str = "dual-fine"
    n_cycles_per_primitive: Optional[int] = None
    three_level: bool = True
    hardware_constrained: bool = False
    threads: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "sequence_lengths", tuple(int(n) for n in self.sequence_lengths))
        lengths = self.sequence_lengths
        if not lengths:
            raise ConfigError("sequence_lengths is empty")
        if lengths[0] < 1 or any(b <= a for a, b in zip(lengths, lengths[1:])):
            raise ConfigError("sequence_lengths must be ascending and >= 1")
        if self.n_random < 1:
            raise ConfigError("n_random must be >= 1")
        if self.mode not in MODES:
            raise ConfigError(f"unknown RB mode {self.mode!r}; expected one of {MODES}")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1")

    @property
    def generator(self) -> KickGenerator:
        return TRANSMON if self.three_level else TWO_LEVEL


@dataclass(frozen=True)
class RBResult:
    lengths: np.ndarray
    visibilities: np.ndarray = field(repr=False)
    """Shape (n_lengths, n_random)."""
    fit: Optional[DecayFit] = None
    mode: str = ""

    @property
    def mean(self) -> np.ndarray:
        return self.visibilities.mean(axis=1)

    @property
    def stderr(self) -> np.ndarray:
        n = self.visibilities.shape[1]
        if n < 2:
            return np.zeros(self.lengths.size)
        return self.visibilities.std(axis=1, ddof=1) / math.sqrt(n)

    @property
    def epc(self) -> Optional[float]:
        return None if self.fit is None else self.fit.epc

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "lengths": self.lengths,
            "mean_visibility": self.mean,
            "stderr": self.stderr,
            "visibilities": self.visibilities,
            "fit": None if self.fit is None else self.fit.to_dict(),
            "epc": self.epc,
        }

    def to_json(self, path: str | Path) -> Path:
        return write_json(path, self.to_dict())

    def to_csv(self, path: str | Path, title: Optional[str] = None) -> Path:
        rows = zip(self.lengths, self.mean, self.stderr)
        return write_csv(path, ["N", "mean_visibility", "stderr"], rows, title)


def job_rng(seed: int, length_index: int, repetition: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(length_index, repetition)))


def draw_sequence(rng: np.random.Generator, length: int) -> list[CliffordElement]:
    """``length`` uniform Cliffords followed by their recovery element."""
    table = clifford_table()
    picks = [table[i] for i in rng.integers(0, len(table), size=length)]
    return picks + [recovery_clifford(picks)]


def _ideal_visibility(sequence: Sequence[CliffordElement]) -> float:
    u = np.eye(2, dtype=complex)
    for element in sequence:
        u = element.matrix @ u
    return float(abs(u[0, 0]) ** 2)


def run_rb(config: RBConfig, calibrations: Optional[CalibrationStore] = None) -> RBResult:
    """
    Visibility |⟨0|ψ⟩|² per (length, repetition), averaged and fitted.

    Without ``calibrations`` the primitives are calibrated for ``config.mode``.
    A failed decay fit is logged and leaves ``fit`` unset.
    """
    params = config.params
    ensure_valid(params)
    generator = config.generator
    if config.mode != "ideal":
        if calibrations is None:
            calibrations = calibrate_all(
                params, config.mode, config.n_cycles_per_primitive,
                config.hardware_constrained, generator,
            )
        missing = calibrations.missing()
        if missing:
            raise ConfigError(f"calibration store lacks {missing}")

    def job(key: tuple[int, int]) -> float:
        li, rep = key
        sequence = draw_sequence(job_rng(config.seed, li, rep), config.sequence_lengths[li])
        if config.mode == "ideal":
            return _ideal_visibility(sequence)
        train, _ = compile_sequence(sequence, calibrations, params)
        state, _ = evolve_kicks(train, params, basis_state(0), generator=generator)
        return min(1.0, float(abs(state[0]) ** 2))

    keys = [(li, rep) for li in range(len(config.sequence_lengths))
            for rep in range(config.n_random)]
    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            values = list(pool.map(job, keys))
    else:
        values = [job(k) for k in keys]
    vis = np.asarray(values).reshape(len(config.sequence_lengths), config.n_random)
    lengths = np.asarray(config.sequence_lengths)
    for n, v in zip(lengths, vis.mean(axis=1)):
        logger.info("rb %s: N=%d mean visibility %.6f", config.mode, n, v)

    fit: Optional[DecayFit] = None
    try:
        fit = fit_decay(lengths, vis.mean(axis=1))
    except FitError as e:
        logger.warning("rb %s: %s", config.mode, e)
    return RBResult(lengths=lengths, visibilities=vis, fit=fit, mode=config.mode)
