"""Channel registry: the one table mapping channel names to units and ranges.

Body channels are the six platform DOFs; their ranges here are syntactic
clip-validation bounds that cover the default workspace envelope.  The
kinematic validator remains the authoritative gate (see lint_clip).  Face
channels are unit intensities, a viseme index, and a gaze offset in meters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from animatron.face import SUPPORTED_AUS, VISEMES


class UnknownChannelError(KeyError):
    def __init__(self, channel: str):
        self.channel = channel
        super().__init__(f"unknown channel {channel!r}")


@dataclass(frozen=True)
class ChannelSpec:
    name: str
    kind: str  # "body" or "face"
    unit: str
    lo: float
    hi: float


BODY_CHANNELS = ("x", "y", "z", "roll", "pitch", "yaw")

_REGISTRY: dict[str, ChannelSpec] = {}
for _name in ("x", "y", "z"):
    _REGISTRY[_name] = ChannelSpec(_name, "body", "m", -0.10, 0.10)
for _name in ("roll", "pitch", "yaw"):
    _REGISTRY[_name] = ChannelSpec(_name, "body", "rad", -math.pi / 2, math.pi / 2)
for _au in SUPPORTED_AUS:
    for _suffix in ("", ".left", ".right"):
        _key = f"au{_au}{_suffix}"
        _REGISTRY[_key] = ChannelSpec(_key, "face", "intensity", 0.0, 1.0)
_REGISTRY["viseme"] = ChannelSpec("viseme", "face", "index", 0.0, float(len(VISEMES) - 1))
for _name in ("gaze.x", "gaze.y", "gaze.z"):
    _REGISTRY[_name] = ChannelSpec(_name, "face", "m", -2.0, 2.0)


def channel_spec(name: str) -> ChannelSpec:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownChannelError(name) from None


def is_known_channel(name: str) -> bool:
    return name in _REGISTRY
