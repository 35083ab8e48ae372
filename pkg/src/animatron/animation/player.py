"""Clip playback as a timed frame stream.

play() emits floor(duration * rate) + 1 frames; frame k is at k/rate
except the final frame, which lands exactly on the clip duration.  Each
frame carries every channel's sampled value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from animatron.animation.clip import AnimationClip
from animatron.animation.sampler import sample_track


@dataclass(frozen=True)
class Frame:
    t: float
    values: dict[str, float]


def frame_times(duration: float, rate: float) -> list[float]:
    if rate <= 0:
        raise ValueError("rate must be positive")
    n = int(math.floor(duration * rate + 1e-9))
    times = [k / rate for k in range(n)]
    times.append(duration)  # final frame exactly at duration
    return times


def play(clip: AnimationClip, rate: float = 50.0) -> list[Frame]:
    frames = []
    for t in frame_times(clip.duration, rate):
        values = {track.channel: sample_track(track, t) for track in clip.tracks}
        frames.append(Frame(t=t, values=values))
    return frames
