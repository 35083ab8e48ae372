"""Workspace sampling: how far the platform can actually move.

Translations are grid-sampled along each axis at home orientation; tilts
are sampled at home position by rotating about horizontal axes at a fan of
azimuths.  Every sample goes through validate_pose, so the report never
claims a pose the solver would reject.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

from animatron.kinematics.geometry import PlatformGeometry
from animatron.kinematics.pose import Pose6
from animatron.kinematics.solver import validate_pose

AXES = ("x", "y", "z")


@dataclass(frozen=True)
class WorkspaceSample:
    pose: Pose6
    reachable: bool
    kind: str  # "translation" or "tilt"


@dataclass(frozen=True)
class WorkspaceReport:
    """Per-axis reachable translation, max tilt, and the raw sample set.

    max_translation[axis] is the guaranteed symmetric range: the smaller
    of the two directional extents, so "can move 4 cm on x" means both
    +4 cm and -4 cm validate.  extents[axis] carries the signed pair.
    max_tilt is the largest tilt from vertical reachable at any sampled
    azimuth; min_tilt_over_azimuth the largest tilt guaranteed at every
    azimuth.  Yaw range is measured separately.
    """

    max_translation: dict[str, float]
    extents: dict[str, tuple[float, float]]
    max_tilt: float
    min_tilt_over_azimuth: float
    max_yaw: float
    translation_resolution: float
    tilt_resolution: float
    azimuth_count: int
    samples: tuple[WorkspaceSample, ...]

    def to_dict(self) -> dict:
        return {
            "geometry_claims": {
                "max_translation_m": self.max_translation,
                "extents_m": {k: list(v) for k, v in self.extents.items()},
                "max_tilt_rad": self.max_tilt,
                "max_tilt_deg": math.degrees(self.max_tilt),
                "min_tilt_over_azimuth_rad": self.min_tilt_over_azimuth,
                "max_yaw_rad": self.max_yaw,
            },
            "resolution": {
                "translation_m": self.translation_resolution,
                "tilt_rad": self.tilt_resolution,
                "azimuth_count": self.azimuth_count,
            },
            "sample_count": len(self.samples),
        }

    def to_json(self, include_samples: bool = False) -> str:
        data = self.to_dict()
        if include_samples:
            data["samples"] = [
                {"pose": s.pose.as_tuple(), "reachable": s.reachable, "kind": s.kind}
                for s in self.samples
            ]
        return json.dumps(data, indent=2)

    def write_csv(self, path: str | Path) -> None:
        """Dump every sample as one row for plotting."""
        with open(path, "w", newline="", encoding="utf-8") as f:
            w = csv.writer(f)
            w.writerow(["kind", "x", "y", "z", "roll", "pitch", "yaw", "reachable"])
            for s in self.samples:
                w.writerow([s.kind, *s.pose.as_tuple(), int(s.reachable)])


def _tilt_pose(axis_azimuth: float, tilt: float) -> Pose6:
    """Pose tilted from vertical by `tilt` about the horizontal axis at `axis_azimuth`.

    Rotation by angle t about axis (cos(phi), sin(phi), 0), converted to the
    intrinsic roll-pitch-yaw convention.
    """
    ux, uy = math.cos(axis_azimuth), math.sin(axis_azimuth)
    c, s = math.cos(tilt), math.sin(tilt)
    one_c = 1.0 - c
    # Rodrigues rotation matrix for the horizontal axis (ux, uy, 0)
    r = [
        [c + ux * ux * one_c, ux * uy * one_c, uy * s],
        [ux * uy * one_c, c + uy * uy * one_c, -ux * s],
        [-uy * s, ux * s, c],
    ]
    # Decompose R = Rx(roll) @ Ry(pitch) @ Rz(yaw):
    #   R[0][2] = sin(pitch), R[1][2] = -sin(roll)cos(pitch), R[0][1] = -cos(pitch)sin(yaw)
    pitch = math.asin(max(-1.0, min(1.0, r[0][2])))
    cp = math.cos(pitch)
    if abs(cp) < 1e-12:
        roll, yaw = math.atan2(r[1][0], r[1][1]), 0.0  # gimbal edge, unused in practice
    else:
        roll = math.atan2(-r[1][2], r[2][2])
        yaw = math.atan2(-r[0][1], r[0][0])
    return Pose6(0.0, 0.0, 0.0, roll, pitch, yaw)


def sample_workspace(
    geom: PlatformGeometry,
    translation_resolution: float = 0.002,
    tilt_resolution: float = math.radians(1.0),
    azimuth_count: int = 24,
    translation_limit: float = 0.15,
    tilt_limit: float = math.radians(80.0),
) -> WorkspaceReport:
    """Sample the reachable workspace of a geometry.

    Walks outward along each axis (both directions) in steps of
    translation_resolution until validate_pose fails, and similarly walks
    tilt magnitude per azimuth.  Resolutions must be positive.
    """
    if translation_resolution <= 0 or tilt_resolution <= 0 or azimuth_count < 1:
        raise ValueError("resolutions must be positive")
    samples: list[WorkspaceSample] = []
    extents: dict[str, tuple[float, float]] = {}

    for ax_i, ax in enumerate(AXES):
        signed: list[float] = []
        for direction in (-1.0, 1.0):
            reach = 0.0
            step = 1
            while step * translation_resolution <= translation_limit:
                offset = direction * step * translation_resolution
                vals = [0.0, 0.0, 0.0]
                vals[ax_i] = offset
                pose = Pose6(*vals)
                ok = validate_pose(pose, geom).valid
                samples.append(WorkspaceSample(pose, ok, "translation"))
                if not ok:
                    break
                reach = abs(offset)
                step += 1
            signed.append(direction * reach)
        extents[ax] = (signed[0], signed[1])

    max_translation = {ax: min(-extents[ax][0], extents[ax][1]) for ax in AXES}

    tilt_maxima: list[float] = []
    for k in range(azimuth_count):
        azimuth = 2.0 * math.pi * k / azimuth_count
        reach = 0.0
        step = 1
        while step * tilt_resolution <= tilt_limit:
            tilt = step * tilt_resolution
            pose = _tilt_pose(azimuth, tilt)
            ok = validate_pose(pose, geom).valid
            samples.append(WorkspaceSample(pose, ok, "tilt"))
            if not ok:
                break
            reach = tilt
            step += 1
        tilt_maxima.append(reach)

    max_yaw = 0.0
    step = 1
    while step * tilt_resolution <= math.pi:
        yaw = step * tilt_resolution
        ok = (
            validate_pose(Pose6(yaw=yaw), geom).valid
            and validate_pose(Pose6(yaw=-yaw), geom).valid
        )
        samples.append(WorkspaceSample(Pose6(yaw=yaw), ok, "tilt"))
        if not ok:
            break
        max_yaw = yaw
        step += 1

    return WorkspaceReport(
        max_translation=max_translation,
        extents=extents,
        max_tilt=max(tilt_maxima),
        min_tilt_over_azimuth=min(tilt_maxima),
        max_yaw=max_yaw,
        translation_resolution=translation_resolution,
        tilt_resolution=tilt_resolution,
        azimuth_count=azimuth_count,
        samples=tuple(samples),
    )
