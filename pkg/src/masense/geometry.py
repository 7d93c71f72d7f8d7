"""Coordinate conventions, Euler rotations, and AoA / spatial-frequency conversions.

Conventions used throughout the package:

* Elevation ``theta`` is measured from the +Z axis, azimuth ``phi`` from +X
  toward +Y.  Public interfaces take and return degrees; radians are used
  internally.
* The plate orientation is an intrinsic Z-Y-X Euler triple: the rotation
  matrix is ``R = Rz(alpha) @ Ry(beta) @ Rx(gamma)``.  Arrival directions in
  the plate frame are ``R.T @ a0``.
* The plate lies in its local X-Z plane with the antenna on the +Y side, so
  a receivable ("front-side") path has a positive local Y component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InfeasibleSfp

POLE_SIN_EPS = 1e-9
SFP_DISK_TOL = 1e-6


def wrap_degrees(angle):
    """Wrap an angle in degrees (scalar or array) into (-180, 180]."""
    wrapped = -((-np.asarray(angle, dtype=float) + 180.0) % 360.0 - 180.0)
    return float(wrapped) if wrapped.ndim == 0 else wrapped


@dataclass(frozen=True)
class AnglePair:
    """Elevation/azimuth pair in degrees; theta in [0, 180], phi in (-180, 180]."""

    theta: float
    phi: float

    def __post_init__(self):
        if not 0.0 <= self.theta <= 180.0:
            raise ValueError(f"elevation must be in [0, 180] deg, got {self.theta}")
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "phi", wrap_degrees(self.phi))


@dataclass(frozen=True)
class Direction3:
    """Unit direction vector; components are dimensionless."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        norm = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if abs(norm - 1.0) > 1e-6:
            raise ValueError(f"direction must be unit norm, got |v| = {norm}")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    @classmethod
    def from_array(cls, vec) -> "Direction3":
        x, y, z = np.asarray(vec, dtype=float)
        return cls(float(x), float(y), float(z))


@dataclass(frozen=True)
class Orientation:
    """Plate rotation angles (degrees) about the initial Z, Y, X axes."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        object.__setattr__(self, "alpha", wrap_degrees(self.alpha))
        object.__setattr__(self, "beta", wrap_degrees(self.beta))
        object.__setattr__(self, "gamma", wrap_degrees(self.gamma))

    @classmethod
    def identity(cls) -> "Orientation":
        return cls(0.0, 0.0, 0.0)


@dataclass(frozen=True)
class SfpPair:
    """Spatial-frequency pair (u, v) = (sin(theta)cos(phi), cos(theta))."""

    u: float
    v: float

    def __post_init__(self):
        r2 = self.u * self.u + self.v * self.v
        if r2 > 1.0 + SFP_DISK_TOL:
            raise InfeasibleSfp(f"u^2 + v^2 = {r2:.8f} exceeds the unit disk")


def unit_direction(angles: AnglePair) -> Direction3:
    """Unit arrival-direction vector [sin(t)cos(p), sin(t)sin(p), cos(t)]."""
    t = math.radians(angles.theta)
    p = math.radians(angles.phi)
    st = math.sin(t)
    return Direction3(st * math.cos(p), st * math.sin(p), math.cos(t))


def angles_from_direction(direction: Direction3) -> AnglePair:
    """Recover (theta, phi) from a unit direction; phi = 0 at the poles."""
    z = min(1.0, max(-1.0, direction.z))
    theta = math.degrees(math.acos(z))
    if math.hypot(direction.x, direction.y) < POLE_SIN_EPS:
        phi = 0.0
    else:
        phi = math.degrees(math.atan2(direction.y, direction.x))
    return AnglePair(theta, phi)


def _rotation_matrix_rad(alpha: float, beta: float, gamma: float) -> np.ndarray:
    ca, sa = math.cos(alpha), math.sin(alpha)
    cb, sb = math.cos(beta), math.sin(beta)
    cg, sg = math.cos(gamma), math.sin(gamma)
    rz = np.array([[ca, -sa, 0.0], [sa, ca, 0.0], [0.0, 0.0, 1.0]])
    ry = np.array([[cb, 0.0, sb], [0.0, 1.0, 0.0], [-sb, 0.0, cb]])
    rx = np.array([[1.0, 0.0, 0.0], [0.0, cg, -sg], [0.0, sg, cg]])
    return rz @ ry @ rx


def rotation_matrix(orient: Orientation) -> np.ndarray:
    """3x3 Euler rotation matrix R = Rz(alpha) @ Ry(beta) @ Rx(gamma)."""
    return _rotation_matrix_rad(
        math.radians(orient.alpha),
        math.radians(orient.beta),
        math.radians(orient.gamma),
    )


def to_plate_frame(orient: Orientation, dir0: Direction3) -> Direction3:
    """Map an initial-frame direction into the rotated plate frame (R.T @ a0)."""
    local = rotation_matrix(orient).T @ dir0.as_array()
    return Direction3.from_array(local)


def sfp_from_local(angles: AnglePair) -> SfpPair:
    """Spatial-frequency pair observed by the X/Z scans for local AoAs."""
    t = math.radians(angles.theta)
    p = math.radians(angles.phi)
    return SfpPair(math.sin(t) * math.cos(p), math.cos(t))


def aoa_from_sfp(sfp: SfpPair, orient: Orientation) -> AnglePair:
    """Initial-frame AoA for a plate-frame (u, v) pair.

    The local direction is reconstructed as [u, +sqrt(1 - u^2 - v^2), v];
    the positive Y root is the front-side branch.  Raises InfeasibleSfp when
    (u, v) lies outside the unit disk by more than the tolerance.
    """
    r2 = sfp.u * sfp.u + sfp.v * sfp.v
    if r2 > 1.0 + SFP_DISK_TOL:
        raise InfeasibleSfp(f"u^2 + v^2 = {r2:.8f} exceeds the unit disk")
    y = math.sqrt(max(0.0, 1.0 - r2))
    local = np.array([sfp.u, y, sfp.v])
    initial = rotation_matrix(orient) @ local
    return angles_from_direction(Direction3.from_array(initial))
