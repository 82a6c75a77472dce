"""
sfqdrive CLI

Spectral sweeps, calibration, randomized benchmarking and trajectories,
driven by a JSON run config. Every command writes its outputs plus a
manifest.json into --out.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from pydantic import ValidationError

from . import __version__
from .core.errors import ConfigError, SFQError
from .core.export import write_json
from .gates.store import CalibrationStore, calibrate_all
from .params.config import RunConfig, load_config
from .pulsetrain.types import DualCycle, DualPulseSchedule
from .rb.protocol import RBConfig, run_rb
from .spectrum.phasor import default_phi_grid, tuning_curve
from .spectrum.sweeps import (
    envelope_comparison,
    envelope_rows_to_csv,
    leakage_rows_to_csv,
    leakage_sweep,
    single_baseline,
)
from .transmon.kicks import TRANSMON, TWO_LEVEL
from .twolevel.bloch import BlochPoint, evolve_bloch, trajectory_to_csv

logger = logging.getLogger("sfqdrive")

VISIBLE_COMMANDS = (
    "tuning-curve",
    "leakage-ratio",
    "envelope-compare",
    "calibrate",
    "rb",
    "trajectory",
)

TITLES = {
    "fig3a": "fig3a: dual/single resonant amplitude ratio vs 2phi",
    "fig3b": "fig3b: leakage ratio A(w12)/A(w01) of calibrated pi trains vs 2phi",
    "fig3c": "fig3c: rectangle vs Gaussian envelope leakage ratio vs gate length",
    "fig4": "fig4: randomized benchmarking mean visibility vs sequence length",
    "bloch": "bloch: Bloch-sphere trajectory of a dual-pulse schedule",
}


@dataclass
class RunManifest:
    command: str
    config: dict[str, Any]
    version: str = __version__
    seed: int = 0
    outputs: list[str] = field(default_factory=list)
    duration_s: float = 0.0
    extras: dict[str, Any] = field(default_factory=dict)

    def add(self, path: Path) -> None:
        self.outputs.append(str(path))

    def write(self, out_dir: Path) -> Path:
        path = out_dir / "manifest.json"
        self.outputs.append(str(path))
        return write_json(path, asdict(self))


def main(argv: Optional[Sequence[str]] = None) -> None:
    parser = argparse.ArgumentParser(
        prog="sfqdrive",
        description="sfqdrive: dual-SFQ-pulse drive simulation for transmon qubits",
    )
    parser.add_argument("--version", action="version", version=f"sfqdrive {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="JSON run config (defaults: set I)")
    common.add_argument("--out", type=Path, default=Path("out"), help="output directory")
    common.add_argument("--seed", type=int, help="override the config seed")
    common.add_argument("--threads", type=int, default=1, help="worker threads")
    common.add_argument("--hardware-constrained", action="store_true",
                        help="restrict phi to the generator's operating range")
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging")

    sub = parser.add_subparsers(dest="command", metavar="{" + ",".join(VISIBLE_COMMANDS) + "}")
    sub.add_parser("tuning-curve", parents=[common],
                   help="dual/single resonant amplitude ratio over phi")
    sub.add_parser("leakage-ratio", parents=[common],
                   help="A(w12)/A(w01) of calibrated pi trains over 2phi")
    sub.add_parser("envelope-compare", parents=[common],
                   help="rectangle vs gaussian strength envelopes")
    cal_p = sub.add_parser("calibrate", parents=[common], help="calibrate primitive gates")
    cal_p.add_argument("--store", type=Path, help="calibration store path")
    rb_p = sub.add_parser("rb", parents=[common], help="randomized benchmarking")
    rb_p.add_argument("--store", type=Path, help="existing calibration store")
    sub.add_parser("trajectory", parents=[common], help="Bloch trajectory of a dual schedule")
    sub.add_parser("verify", parents=[common])

    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        _run(args)
    except (SFQError, ValidationError, OSError) as e:
        payload = e.to_dict() if isinstance(e, SFQError) else {
            "error": "CONFIG" if isinstance(e, ValidationError) else "IO",
            "message": str(e),
        }
        print(json.dumps(payload), file=sys.stderr)
        sys.exit(1)


def _run(args: argparse.Namespace) -> None:
    if args.command == "verify":
        _verify(args)
        return
    config = load_config(args.config)
    if args.seed is not None:
        config = config.model_copy(update={"seed": args.seed})
    if args.hardware_constrained:
        config = config.model_copy(update={"hardware_constrained": True})
    if args.threads < 1:
        raise ConfigError("--threads must be >= 1")

    out_dir: Path = args.out
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = RunManifest(command=args.command, config=config.model_dump(), seed=config.seed)
    started = time.perf_counter()
    COMMANDS[args.command](config, args, out_dir, manifest)
    manifest.duration_s = time.perf_counter() - started
    manifest.write(out_dir)


def _tuning_curve(config: RunConfig, args, out_dir: Path, manifest: RunManifest) -> None:
    section = config.tuning_curve
    curve = tuning_curve(default_phi_grid(section.n_points), config.qubit_params(),
                         section.n_cycles)
    manifest.add(curve.to_csv(out_dir / "fig3a.csv", TITLES["fig3a"]))
    manifest.extras["normalization"] = curve.normalization


def _leakage_ratio(config: RunConfig, args, out_dir: Path, manifest: RunManifest) -> None:
    section = config.leakage_ratio
    params = config.qubit_params()
    rows = leakage_sweep(
        default_phi_grid(section.n_points), params, section.target_angle_rad,
        section.max_cycles, hardware_constrained=config.hardware_constrained,
    )
    manifest.add(leakage_rows_to_csv(rows, out_dir / "fig3b.csv", TITLES["fig3b"]))
    manifest.extras["single_baseline_ratio"] = single_baseline(params, section.target_angle_rad)
    manifest.extras["infeasible_rows"] = sum(1 for r in rows if math.isnan(r.ratio))


def _envelope_compare(config: RunConfig, args, out_dir: Path, manifest: RunManifest) -> None:
    section = config.envelope_compare
    rows = envelope_comparison(
        section.gate_lengths_s, config.qubit_params(), sigma_factor=section.sigma_factor,
        hardware_constrained=config.hardware_constrained,
    )
    manifest.add(envelope_rows_to_csv(rows, out_dir / "fig3c.csv", TITLES["fig3c"]))


def _calibrate(config: RunConfig, args, out_dir: Path, manifest: RunManifest) -> None:
    section = config.calibrate
    store = calibrate_all(
        config.qubit_params(), section.mode, section.n_cycles_per_primitive,
        config.hardware_constrained,
    )
    manifest.add(store.save(args.store or out_dir / "calibration.json"))


def _rb(config: RunConfig, args, out_dir: Path, manifest: RunManifest) -> None:
    section = config.rb
    params = config.qubit_params()
    generator = TRANSMON if section.three_level else TWO_LEVEL
    store: Optional[CalibrationStore] = None
    if section.mode != "ideal":
        if args.store is not None and Path(args.store).exists():
            store = CalibrationStore.load(args.store)
            manifest.extras["calibration_store"] = str(args.store)
        else:
            store = calibrate_all(params, section.mode, section.n_cycles_per_primitive,
                                  config.hardware_constrained, generator)
            manifest.add(store.save(out_dir / "calibration.json"))
            manifest.extras["calibrated_implicitly"] = True
    rb_config = RBConfig(
        params=params,
        sequence_lengths=tuple(section.sequence_lengths),
        n_random=section.n_random,
        seed=config.seed,
        mode=section.mode,
        n_cycles_per_primitive=section.n_cycles_per_primitive,
        three_level=section.three_level,
        hardware_constrained=config.hardware_constrained,
        threads=args.threads,
    )
    result = run_rb(rb_config, store)
    manifest.add(result.to_csv(out_dir / "fig4.csv", TITLES["fig4"]))
    manifest.add(result.to_json(out_dir / "fig4.json"))
    manifest.add(write_json(out_dir / "fig4_fit.json",
                            None if result.fit is None else result.fit.to_dict()))
    if result.fit is not None:
        fit = result.fit
        print(f"A={fit.a:.6g} B={fit.b:.6g} p={fit.p:.8g} EPC={fit.epc:.4g}")


def _trajectory(config: RunConfig, args, out_dir: Path, manifest: RunManifest) -> None:
    section = config.trajectory
    schedule = DualPulseSchedule(
        cycles=tuple(DualCycle(k, section.phi_rad, section.psi_rad)
                     for k in range(section.n_cycles)),
        params=config.qubit_params(),
        hardware_constrained=config.hardware_constrained,
    )
    points = evolve_bloch(schedule, BlochPoint(*section.initial), section.substeps)
    manifest.add(trajectory_to_csv(points, out_dir / "bloch.csv", TITLES["bloch"]))


def _verify(args: argparse.Namespace) -> None:
    from .oracles import run_all

    params = load_config(args.config).qubit_params()
    failed = 0
    for report in run_all(params):
        print(report.to_json())
        failed += not report.passed
    if failed:
        raise SFQError(f"{failed} reference check(s) failed")


COMMANDS: dict[str, Callable[..., None]] = {
    "tuning-curve": _tuning_curve,
    "leakage-ratio": _leakage_ratio,
    "envelope-compare": _envelope_compare,
    "calibrate": _calibrate,
    "rb": _rb,
    "trajectory": _trajectory,
}


if __name__ == "__main__":
    main()
