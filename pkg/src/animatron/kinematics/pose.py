"""Platform pose representation and the rotation convention.

This module is the single home of the rotation convention used everywhere
in the package: intrinsic roll-pitch-yaw, i.e. rotate about the body x axis
by roll, then about the new y axis by pitch, then about the new z axis by
yaw.  As a matrix acting on platform-frame column vectors this is

    R = Rx(roll) @ Ry(pitch) @ Rz(yaw)

Translations are offsets of the platform center from its home position
(the pose the platform assumes with all servo horns at zero).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_TWO_PI = 2.0 * math.pi


def normalize_angle(a: float) -> float:
    """Wrap an angle into (-pi, pi]."""
    a = math.fmod(a, _TWO_PI)
    if a <= -math.pi:
        a += _TWO_PI
    elif a > math.pi:
        a -= _TWO_PI
    # fmod(-0.0) and the boundary fold can leave -0.0 behind
    return a + 0.0


@dataclass(frozen=True)
class Pose6:
    """6-DOF platform pose: translation in meters, angles in radians.

    x, y, z are the platform-center offset from the home frame; roll,
    pitch, yaw follow the intrinsic x-y-z convention documented above.
    Angles are normalized to (-pi, pi] on construction; non-finite fields
    are rejected.
    """

    x: float = 0.0
    y: float = 0.0
    z: float = 0.0
    roll: float = 0.0
    pitch: float = 0.0
    yaw: float = 0.0

    def __post_init__(self):
        for name in ("x", "y", "z", "roll", "pitch", "yaw"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"pose field {name!r} is not finite: {v!r}")
        object.__setattr__(self, "roll", normalize_angle(self.roll))
        object.__setattr__(self, "pitch", normalize_angle(self.pitch))
        object.__setattr__(self, "yaw", normalize_angle(self.yaw))

    @property
    def translation(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @property
    def angles(self) -> tuple[float, float, float]:
        return (self.roll, self.pitch, self.yaw)

    def rotation(self) -> np.ndarray:
        return rotation_matrix(self.roll, self.pitch, self.yaw)

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.x, self.y, self.z, self.roll, self.pitch, self.yaw)

    @classmethod
    def from_sequence(cls, values) -> "Pose6":
        vals = list(values)
        if len(vals) != 6:
            raise ValueError(f"expected 6 pose values, got {len(vals)}")
        return cls(*map(float, vals))


def _rx(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def _ry(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def _rz(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def rotation_matrix(roll: float, pitch: float, yaw: float) -> np.ndarray:
    """Intrinsic x-y-z rotation matrix (platform frame -> base frame)."""
    return _rx(roll) @ _ry(pitch) @ _rz(yaw)


def _drx(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[0.0, 0.0, 0.0], [0.0, -s, -c], [0.0, c, -s]])


def _dry(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[-s, 0.0, c], [0.0, 0.0, 0.0], [-c, 0.0, -s]])


def _drz(a: float) -> np.ndarray:
    c, s = math.cos(a), math.sin(a)
    return np.array([[-s, -c, 0.0], [c, -s, 0.0], [0.0, 0.0, 0.0]])


def rotation_partials(roll: float, pitch: float, yaw: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """dR/droll, dR/dpitch, dR/dyaw for the Newton FK Jacobian."""
    rx, ry, rz = _rx(roll), _ry(pitch), _rz(yaw)
    return (
        _drx(roll) @ ry @ rz,
        rx @ _dry(pitch) @ rz,
        rx @ ry @ _drz(yaw),
    )
