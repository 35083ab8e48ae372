"""Shared face vocabulary: visemes, action units, expressions, messages.

The mouth-shape inventory is a fixed 15-symbol set (neutral "sil" plus 14
shapes); the face client ships one shape per symbol.  Action units follow
the FACS numbering for a supported subset covering brows, lids, smile,
frown and jaw, each activatable on the left, right or both sides.

Message payloads built here are what the bridge broadcasts to face
clients, wrapped in the versioned envelope {v, robot, seq, type, payload}.
"""

from __future__ import annotations

import math

FACE_SCHEMA_VERSION = 1

VISEMES = (
    "sil", "PP", "FF", "TH", "DD", "kk", "CH", "SS", "nn", "RR",
    "aa", "E", "ih", "oh", "ou",
)

SUPPORTED_AUS = (1, 2, 4, 5, 6, 7, 12, 15, 26)

AU_SIDES = ("left", "right", "both")

# name -> list of (au, side, intensity); resolvable from <expr:...> tags
EXPRESSIONS: dict[str, tuple[tuple[int, str, float], ...]] = {
    "neutral": (),
    "smile": ((12, "both", 1.0), (6, "both", 0.6)),
    "grin": ((12, "both", 0.7), (26, "both", 0.3)),
    "frown": ((15, "both", 1.0), (4, "both", 0.6)),
    "sad": ((1, "both", 0.6), (15, "both", 0.8)),
    "angry": ((4, "both", 1.0), (7, "both", 0.8)),
    "surprise": ((1, "both", 0.8), (2, "both", 0.8), (5, "both", 0.9), (26, "both", 0.7)),
    "skeptical": ((2, "left", 1.0), (7, "right", 0.5)),
}


class FaceCommandError(ValueError):
    """Invalid face command payload."""


def _check_intensity(value: float) -> float:
    v = float(value)
    if not (0.0 <= v <= 1.0) or not math.isfinite(v):
        raise FaceCommandError(f"intensity must be in [0, 1], got {value!r}")
    return v


def viseme_message(symbol: str) -> dict:
    if symbol not in VISEMES:
        raise FaceCommandError(f"unknown viseme {symbol!r}")
    return {"type": "viseme", "symbol": symbol}


def action_units_message(units) -> dict:
    payload = []
    for au, side, intensity in units:
        if au not in SUPPORTED_AUS:
            raise FaceCommandError(f"unsupported action unit {au!r}")
        if side not in AU_SIDES:
            raise FaceCommandError(f"action unit side must be one of {AU_SIDES}, got {side!r}")
        payload.append({"au": int(au), "side": side, "intensity": _check_intensity(intensity)})
    return {"type": "action_units", "units": payload}


def expression_message(name: str) -> dict:
    if name not in EXPRESSIONS:
        raise FaceCommandError(f"unknown expression {name!r}")
    return action_units_message(EXPRESSIONS[name])


def gaze_message(x: float, y: float, z: float) -> dict:
    point = [float(x), float(y), float(z)]
    if not all(math.isfinite(c) for c in point):
        raise FaceCommandError(f"gaze point must be finite, got {point}")
    return {"type": "gaze", "point": point}


def look_reset_message() -> dict:
    return {"type": "look_reset"}


def face_config_message(config: dict) -> dict:
    allowed = {"colors", "pupil_shape", "element_sizes"}
    unknown = set(config) - allowed
    if unknown:
        raise FaceCommandError(f"unknown face config keys: {sorted(unknown)}")
    return {"type": "face_config", "config": dict(config)}


def audio_message(duration: float, key: str | None = None) -> dict:
    msg = {"type": "audio", "duration": float(duration)}
    if key is not None:
        msg["key"] = key
    return msg


def pose_message(pose_tuple, t: float) -> dict:
    return {"type": "pose", "pose": [float(v) for v in pose_tuple], "t": float(t)}
