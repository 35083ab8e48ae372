"""Platform geometry: anchor layout, link lengths, servo axes and limits.

The geometry fully determines the inverse-kinematic map.  Geometries are
loaded from a versioned JSON config file; the bundled default
("tabletop-v1") was tuned until the sampled workspace comfortably covers
+/-4 cm of translation on every axis and over 40 degrees of tilt, then
frozen.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from animatron.controller.calibration import ServoCalibration

GEOMETRY_SCHEMA_VERSION = 1


class GeometryError(ValueError):
    """Raised for invalid or inconsistent geometry definitions."""


@dataclass(frozen=True)
class PlatformGeometry:
    """Rotary Stewart-platform geometry, all lengths in meters.

    base_anchors[i] is servo i's shaft position in the base frame
    (origin at base center, z up); platform_anchors[i] is the rod
    attachment point in the platform frame (origin at platform center).
    servo_axis_angles[i] is the horizontal heading of the plane the horn
    sweeps; horn_directions[i] is +1 or -1 and encodes the mirrored
    mounting of servo pairs (positive horn angle raises the tip on a +1
    servo and lowers it on a -1 servo).  home_height is the platform
    center height at which all horns sit horizontal, i.e. the zero-angle
    (home) pose.
    """

    base_anchors: np.ndarray
    platform_anchors: np.ndarray
    horn_length: float
    rod_length: float
    servo_axis_angles: np.ndarray
    horn_directions: np.ndarray
    servo_min: float
    servo_max: float
    home_height: float
    name: str = "unnamed"
    calibration: ServoCalibration = field(default_factory=ServoCalibration.default)

    def __post_init__(self):
        base = np.asarray(self.base_anchors, dtype=float)
        plat = np.asarray(self.platform_anchors, dtype=float)
        beta = np.asarray(self.servo_axis_angles, dtype=float)
        dirs = np.asarray(self.horn_directions, dtype=float)
        if base.shape != (6, 3) or plat.shape != (6, 3):
            raise GeometryError(
                f"anchor arrays must be 6x3, got base {base.shape} / platform {plat.shape}"
            )
        if beta.shape != (6,) or dirs.shape != (6,):
            raise GeometryError("servo_axis_angles and horn_directions must have 6 entries")
        if not all(d in (-1.0, 1.0) for d in dirs):
            raise GeometryError(f"horn_directions must be +/-1, got {dirs.tolist()}")
        if not (self.horn_length > 0 and self.rod_length > 0):
            raise GeometryError("horn and rod lengths must be positive")
        if self.rod_length <= self.horn_length:
            raise GeometryError(
                f"rod must be longer than horn ({self.rod_length} <= {self.horn_length})"
            )
        if not self.servo_min < self.servo_max:
            raise GeometryError("servo_min must be below servo_max")
        if not (math.isfinite(self.home_height) and self.home_height > 0):
            raise GeometryError(f"home_height must be positive, got {self.home_height}")
        for arr, name in ((base, "base_anchors"), (plat, "platform_anchors"), (beta, "servo_axis_angles")):
            if not np.all(np.isfinite(arr)):
                raise GeometryError(f"{name} contains non-finite values")
        base.setflags(write=False)
        plat.setflags(write=False)
        beta.setflags(write=False)
        dirs.setflags(write=False)
        object.__setattr__(self, "base_anchors", base)
        object.__setattr__(self, "platform_anchors", plat)
        object.__setattr__(self, "servo_axis_angles", beta)
        object.__setattr__(self, "horn_directions", dirs)

    def to_dict(self) -> dict:
        return {
            "version": GEOMETRY_SCHEMA_VERSION,
            "name": self.name,
            "base_anchors": self.base_anchors.tolist(),
            "platform_anchors": self.platform_anchors.tolist(),
            "horn_length": self.horn_length,
            "rod_length": self.rod_length,
            "servo_axis_angles": self.servo_axis_angles.tolist(),
            "horn_directions": [int(d) for d in self.horn_directions],
            "servo_min": self.servo_min,
            "servo_max": self.servo_max,
            "home_height": self.home_height,
            "calibration": self.calibration.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "PlatformGeometry":
        version = d.get("version")
        if version != GEOMETRY_SCHEMA_VERSION:
            raise GeometryError(f"unsupported geometry schema version: {version!r}")
        try:
            calib = (
                ServoCalibration.from_dict(d["calibration"])
                if "calibration" in d
                else ServoCalibration.default()
            )
            return cls(
                base_anchors=np.array(d["base_anchors"], dtype=float),
                platform_anchors=np.array(d["platform_anchors"], dtype=float),
                horn_length=float(d["horn_length"]),
                rod_length=float(d["rod_length"]),
                servo_axis_angles=np.array(d["servo_axis_angles"], dtype=float),
                horn_directions=np.array(d["horn_directions"], dtype=float),
                servo_min=float(d["servo_min"]),
                servo_max=float(d["servo_max"]),
                home_height=float(d["home_height"]),
                name=str(d.get("name", "unnamed")),
                calibration=calib,
            )
        except KeyError as e:
            raise GeometryError(f"geometry config missing field {e.args[0]!r}") from None


def load_geometry(path: str | Path) -> PlatformGeometry:
    """Load a geometry JSON config file."""
    with open(path, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise GeometryError(f"{path}: invalid JSON: {e}") from None
    return PlatformGeometry.from_dict(data)


def save_geometry(geom: PlatformGeometry, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(geom.to_dict(), f, indent=2)
        f.write("\n")


def solve_home_height(
    base_anchor: np.ndarray,
    platform_anchor: np.ndarray,
    beta: float,
    horn_length: float,
    rod_length: float,
) -> float:
    """Platform-center height at which this leg's horn sits horizontal.

    With the horn at zero the tip is fixed; the rod constraint then pins
    the platform height: rod^2 = (horizontal tip-to-anchor)^2 + z^2.
    """
    tip = base_anchor + horn_length * np.array([math.cos(beta), math.sin(beta), 0.0])
    horiz = platform_anchor[:2] - tip[:2]
    w2 = float(horiz @ horiz)
    slack = rod_length**2 - w2
    if slack <= 0:
        raise GeometryError(
            "rod too short for a horizontal-horn home pose "
            f"(rod {rod_length}, horizontal span {math.sqrt(w2):.4f})"
        )
    return math.sqrt(slack) + tip[2] - platform_anchor[2]


def build_paired_geometry(
    base_radius: float,
    base_half_angle: float,
    platform_radius: float,
    platform_half_angle: float,
    horn_length: float,
    rod_length: float,
    servo_min: float = -math.pi / 2,
    servo_max: float = math.pi / 2,
    name: str = "paired",
    calibration: ServoCalibration | None = None,
) -> PlatformGeometry:
    """Build the standard six-servo layout from a handful of parameters.

    Servos sit in mirrored pairs around three axes 120 degrees apart
    (at 0, 120 and 240 degrees); each pair's shafts are offset by
    +/-base_half_angle from the axis, and the pair's platform anchors by
    +/-platform_half_angle around the same axis.  Horns sweep vertical
    planes headed tangentially outward from the pair, so the two push
    rods of a pair cross; uncrossed rods leave the platform nearly free
    to yaw, which shows up as multiple forward-kinematics solutions
    packed inside the workspace.  Horn directions alternate +1/-1 within
    each pair (mirrored mounting).

    The layout is mirror-symmetric about the xz-plane with leg
    permutation (0 1)(2 5)(3 4).
    """
    if not (0 < platform_half_angle < math.pi / 3):
        raise GeometryError("platform_half_angle must be in (0, 60deg)")
    base, plat, betas, dirs = [], [], [], []
    for p in range(3):
        axis = 2.0 * math.pi / 3.0 * p
        for k, sgn in enumerate((-1.0, 1.0)):
            phi_b = axis + sgn * base_half_angle
            base.append([base_radius * math.cos(phi_b), base_radius * math.sin(phi_b), 0.0])
            phi_p = axis + sgn * platform_half_angle
            plat.append([platform_radius * math.cos(phi_p), platform_radius * math.sin(phi_p), 0.0])
            betas.append(phi_b + sgn * math.pi / 2.0)
            dirs.append(-sgn)
    base_arr = np.array(base)
    plat_arr = np.array(plat)
    beta_arr = np.array(betas)
    heights = [
        solve_home_height(base_arr[i], plat_arr[i], beta_arr[i], horn_length, rod_length)
        for i in range(6)
    ]
    if max(heights) - min(heights) > 1e-9:
        raise GeometryError("paired layout produced incongruent legs")  # pragma: no cover
    return PlatformGeometry(
        base_anchors=base_arr,
        platform_anchors=plat_arr,
        horn_length=horn_length,
        rod_length=rod_length,
        servo_axis_angles=beta_arr,
        horn_directions=np.array(dirs),
        servo_min=servo_min,
        servo_max=servo_max,
        home_height=heights[0],
        name=name,
        calibration=calibration or ServoCalibration.default(),
    )


def default_geometry() -> PlatformGeometry:
    """The frozen bundled geometry (data/geometry/tabletop_v1.json)."""
    ref = resources.files("animatron.data").joinpath("geometry/tabletop_v1.json")
    return PlatformGeometry.from_dict(json.loads(ref.read_text(encoding="utf-8")))
