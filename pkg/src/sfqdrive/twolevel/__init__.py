"""Two-level per-cycle propagators and Bloch trajectories."""

from .bloch import NORTH, BlochPoint, evolve_bloch, trajectory_to_csv
from .rotations import (
    cycle_unitary_approx,
    cycle_unitary_closed_form,
    cycle_unitary_exact,
    effective_delta_theta,
    projective_distance,
    projectively_equal,
    rotation_x,
    rotation_xy,
    rotation_y,
    rotation_z,
    train_propagator,
    zyz_angles,
)

__all__ = [
    "NORTH",
    "BlochPoint",
    "evolve_bloch",
    "trajectory_to_csv",
    "cycle_unitary_approx",
    "cycle_unitary_closed_form",
    "cycle_unitary_exact",
    "effective_delta_theta",
    "projective_distance",
    "projectively_equal",
    "rotation_x",
    "rotation_xy",
    "rotation_y",
    "rotation_z",
    "train_propagator",
    "zyz_angles",
]
