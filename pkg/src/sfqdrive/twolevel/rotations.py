"""
Two-Level Rotations

Half-angle rotation matrices and the per-clock-cycle dual-pulse propagator.

Conventions:
    R_z(θ) = diag(e^{−iθ/2}, e^{iθ/2})
    R_y(θ) = [[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]]
    rotation_xy(θ, ψ) turns about n(ψ) = (−sin ψ, cos ψ, 0), so ψ = 0 is +y
    and ψ = −π/2 is +x.

The per-cycle product keeps the −I carried by R_z(2π); compare gates with
``projectively_equal`` when the global phase is irrelevant.
"""

from __future__ import annotations

import math

import numpy as np
import numpy.typing as npt

from ..core.types import Unitary2
from ..pulsetrain.types import PulseTrain

_I2 = np.eye(2, dtype=complex)
_SX = np.array([[0, 1], [1, 0]], dtype=complex)
_SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
_SZ = np.array([[1, 0], [0, -1]], dtype=complex)


def rotation_z(angle: float) -> Unitary2:
    half = 0.5 * angle
    return np.array([[np.exp(-1j * half), 0], [0, np.exp(1j * half)]], dtype=complex)


def rotation_y(angle: float) -> Unitary2:
    c, s = math.cos(0.5 * angle), math.sin(0.5 * angle)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rotation_x(angle: float) -> Unitary2:
    c, s = math.cos(0.5 * angle), math.sin(0.5 * angle)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def rotation_xy(angle: float, axis_phase: float) -> Unitary2:
    """Rotation by ``angle`` about the equatorial axis n(axis_phase)."""
    nx, ny = -math.sin(axis_phase), math.cos(axis_phase)
    c, s = math.cos(0.5 * angle), math.sin(0.5 * angle)
    return c * _I2 - 1j * s * (nx * _SX + ny * _SY)


def cycle_unitary_exact(delta_theta: float, phi: float) -> Unitary2:
    """R_z(φ)·R_y(δθ)·R_z(2π−2φ)·R_y(δθ)·R_z(φ) for one clock cycle."""
    edge = rotation_z(phi)
    kick = rotation_y(delta_theta)
    return edge @ kick @ rotation_z(2.0 * math.pi - 2.0 * phi) @ kick @ edge


def cycle_unitary_closed_form(delta_theta: float, phi: float) -> Unitary2:
    """Entrywise closed form of ``cycle_unitary_exact``."""
    c2 = math.cos(0.5 * delta_theta) ** 2
    s2 = math.sin(0.5 * delta_theta) ** 2
    off = math.cos(phi) * math.sin(delta_theta)
    shift = 2.0 * phi - math.pi
    return np.array(
        [
            [-c2 - s2 * np.exp(-1j * shift), off],
            [-off, -c2 - s2 * np.exp(1j * shift)],
        ],
        dtype=complex,
    )


def effective_delta_theta(delta_theta: float, phi: float) -> float:
    """Equivalent per-cycle rotation 2·cos(φ)·δθ of a dual pair."""
    return 2.0 * math.cos(phi) * delta_theta


def cycle_unitary_approx(delta_theta: float, phi: float) -> Unitary2:
    """−R_y(2cos φ·δθ), accurate to second order in δθ."""
    return -rotation_y(effective_delta_theta(delta_theta, phi))


def zyz_angles(u: npt.ArrayLike) -> tuple[float, float, float]:
    """
    Angles (a, β, b) with U ∝ R_z(a)·R_y(β)·R_z(b) and 0 ≤ β ≤ π.

    A non-unitary block (leakage) is first replaced by its nearest unitary.
    When β is 0 or π only a + b or a − b is determined.
    """
    left, _, right = np.linalg.svd(np.asarray(u, dtype=complex))
    w = left @ right
    v = w / np.sqrt(np.linalg.det(w))
    top = float(np.angle(v[0, 0]))
    bottom = float(np.angle(v[1, 0]))
    beta = 2.0 * math.atan2(abs(v[1, 0]), abs(v[0, 0]))
    return bottom - top, beta, -bottom - top


def projective_distance(u: npt.ArrayLike, v: npt.ArrayLike) -> float:
    """1 − |Tr(U†V)|/d; zero iff U and V agree up to a global phase."""
    a = np.asarray(u, dtype=complex)
    b = np.asarray(v, dtype=complex)
    d = a.shape[0]
    return float(max(0.0, 1.0 - abs(np.trace(a.conj().T @ b)) / d))


def projectively_equal(u: npt.ArrayLike, v: npt.ArrayLike, atol: float = 1e-10) -> bool:
    return projective_distance(u, v) <= atol


def train_propagator(
    train: PulseTrain, omega01: float, delta_theta: float, start: float = 0.0
) -> Unitary2:
    """
    Rotating-frame propagator of a delta-pulse train on an ideal two-level qubit.

    A pulse at time t rotates by δθ·polarity about n(ω₀₁·(t − start)); free
    precession vanishes in the frame rotating at ω₀₁.
    """
    u = _I2.copy()
    for event in train.events:
        u = rotation_xy(delta_theta * event.polarity, omega01 * (event.time - start)) @ u
    return u
