"""Keyframe clip model and its validation rules."""

from __future__ import annotations

import math
from dataclasses import dataclass

from animatron.animation.channels import channel_spec, is_known_channel


class ClipError(ValueError):
    """Base class for clip parse/validation failures."""


class ClipSyntaxError(ClipError):
    def __init__(self, line: int, col: int, msg: str):
        self.line, self.col = line, col
        super().__init__(f"invalid JSON at line {line} column {col}: {msg}")


class SchemaError(ClipError):
    def __init__(self, path: str, reason: str):
        self.path, self.reason = path, reason
        super().__init__(f"{path}: {reason}")


class DuplicateChannelError(ClipError):
    def __init__(self, channel: str):
        self.channel = channel
        super().__init__(f"duplicate channel {channel!r}")


@dataclass(frozen=True)
class Keyframe:
    """One knot: time, value, optional (dt, dv) Bezier handle offsets.

    out_handle shapes the outgoing segment (dt >= 0), in_handle the
    incoming one (dt <= 0); span limits are enforced per segment by
    AnimationTrack since they depend on the neighboring keyframe.
    """

    t: float
    v: float
    out_handle: tuple[float, float] | None = None
    in_handle: tuple[float, float] | None = None

    def __post_init__(self):
        if not (math.isfinite(self.t) and self.t >= 0.0):
            raise ClipError(f"keyframe time must be finite and >= 0, got {self.t!r}")
        if not math.isfinite(self.v):
            raise ClipError(f"keyframe value must be finite, got {self.v!r}")
        for attr in ("out_handle", "in_handle"):
            h = getattr(self, attr)
            if h is None:
                continue
            if len(h) != 2 or not all(math.isfinite(c) for c in h):
                raise ClipError(f"{attr} must be a finite (dt, dv) pair, got {h!r}")
            object.__setattr__(self, attr, (float(h[0]), float(h[1])))
        if self.out_handle is not None and self.out_handle[0] < 0:
            raise ClipError("out_handle time offset must be >= 0")
        if self.in_handle is not None and self.in_handle[0] > 0:
            raise ClipError("in_handle time offset must be <= 0")


@dataclass(frozen=True)
class AnimationTrack:
    channel: str
    keyframes: tuple[Keyframe, ...]

    def __post_init__(self):
        if not is_known_channel(self.channel):
            raise SchemaError(f"track '{self.channel}'", "unknown channel")
        if not self.keyframes:
            raise SchemaError(f"track '{self.channel}'", "needs at least one keyframe")
        object.__setattr__(self, "keyframes", tuple(self.keyframes))
        spec = channel_spec(self.channel)
        prev = None
        for idx, kf in enumerate(self.keyframes):
            where = f"track '{self.channel}' keyframe {idx}"
            if prev is not None and kf.t <= prev.t:
                raise SchemaError(where, f"times must be strictly increasing ({kf.t} after {prev.t})")
            if not (spec.lo <= kf.v <= spec.hi):
                raise SchemaError(
                    where, f"value {kf.v} outside [{spec.lo}, {spec.hi}] {spec.unit}"
                )
            if prev is not None:
                span = kf.t - prev.t
                if prev.out_handle is not None and prev.out_handle[0] > span:
                    raise SchemaError(
                        f"track '{self.channel}' keyframe {idx - 1}",
                        f"out_handle exceeds segment span {span}",
                    )
                if kf.in_handle is not None and -kf.in_handle[0] > span:
                    raise SchemaError(where, f"in_handle exceeds segment span {span}")
            prev = kf

    @property
    def duration(self) -> float:
        return self.keyframes[-1].t


@dataclass(frozen=True)
class AnimationClip:
    name: str
    tracks: tuple[AnimationTrack, ...]

    def __post_init__(self):
        if not self.name:
            raise SchemaError("name", "clip name must be nonempty")
        object.__setattr__(self, "tracks", tuple(self.tracks))
        seen = set()
        for track in self.tracks:
            if track.channel in seen:
                raise DuplicateChannelError(track.channel)
            seen.add(track.channel)

    @property
    def duration(self) -> float:
        return max((t.duration for t in self.tracks), default=0.0)

    @property
    def channels(self) -> tuple[str, ...]:
        return tuple(t.channel for t in self.tracks)

    def track(self, channel: str) -> AnimationTrack:
        for t in self.tracks:
            if t.channel == channel:
                return t
        from animatron.animation.channels import UnknownChannelError

        raise UnknownChannelError(channel)
