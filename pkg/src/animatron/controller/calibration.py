"""Servo tick calibration: the angle <-> tick map and the motor-level limits.

Tick limits are the second, lower level of the two-level safety scheme:
the kinematic layer rejects invalid poses before they are ever converted,
and the tick clamp here catches anything that slips through (clamping is
silent by design).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ServoCalibration:
    ticks_per_radian: float
    center_tick: int
    min_tick: int
    max_tick: int

    def __post_init__(self):
        if self.ticks_per_radian <= 0:
            raise ValueError("ticks_per_radian must be positive")
        if not (self.min_tick < self.center_tick < self.max_tick):
            raise ValueError(
                f"tick limits must satisfy min < center < max, got "
                f"{self.min_tick} / {self.center_tick} / {self.max_tick}"
            )

    @classmethod
    def default(cls) -> "ServoCalibration":
        # 1024 ticks over 300 degrees, centered; limits at +/-90 deg.
        tpr = 1024.0 / math.radians(300.0)
        half = round(tpr * math.pi / 2)
        return cls(ticks_per_radian=tpr, center_tick=512, min_tick=512 - half, max_tick=512 + half)

    @classmethod
    def from_dict(cls, d: dict) -> "ServoCalibration":
        return cls(
            ticks_per_radian=float(d["ticks_per_radian"]),
            center_tick=int(d["center_tick"]),
            min_tick=int(d["min_tick"]),
            max_tick=int(d["max_tick"]),
        )

    def to_dict(self) -> dict:
        return {
            "ticks_per_radian": self.ticks_per_radian,
            "center_tick": self.center_tick,
            "min_tick": self.min_tick,
            "max_tick": self.max_tick,
        }


def angles_to_ticks(alpha, calib: ServoCalibration) -> list[int]:
    """Convert horn angles (radians) to clamped integer ticks."""
    arr = np.asarray(alpha, dtype=float)
    ticks = np.rint(calib.center_tick + arr * calib.ticks_per_radian).astype(int)
    return list(np.clip(ticks, calib.min_tick, calib.max_tick))


def ticks_to_angles(ticks, calib: ServoCalibration) -> list[float]:
    """Inverse of angles_to_ticks for in-range ticks."""
    arr = np.asarray(ticks, dtype=float)
    return list((arr - calib.center_tick) / calib.ticks_per_radian)
