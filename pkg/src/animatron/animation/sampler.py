"""Cubic Bezier track sampling.

Each segment between consecutive keyframes is a cubic in (time, value)
space.  Explicit handles are control-point offsets from the endpoints;
omitted handles default to one third of the segment span with Catmull-Rom
slopes estimated from the neighboring keyframes, which gives smooth motion
for plain {t, v} clips.

Sampling solves the curve parameter from the time component by bisection
(the track invariants keep time monotone in the parameter), then evaluates
the value component.  Samples at knots return the keyframe value exactly,
with no interpolation in the loop.
"""

from __future__ import annotations

from bisect import bisect_right

from animatron.animation.channels import UnknownChannelError
from animatron.animation.clip import AnimationClip, AnimationTrack

TIME_SOLVE_TOLERANCE = 1e-12


def _slope(track: AnimationTrack, idx: int) -> float:
    """Catmull-Rom slope estimate at keyframe idx (one-sided at the ends)."""
    kfs = track.keyframes
    lo = max(idx - 1, 0)
    hi = min(idx + 1, len(kfs) - 1)
    if hi == lo:
        return 0.0
    return (kfs[hi].v - kfs[lo].v) / (kfs[hi].t - kfs[lo].t)


def segment_controls(
    track: AnimationTrack, seg: int
) -> tuple[tuple[float, float], tuple[float, float], tuple[float, float], tuple[float, float]]:
    """Control points (p0, p1, p2, p3) of segment seg in (time, value) space."""
    k0 = track.keyframes[seg]
    k1 = track.keyframes[seg + 1]
    span = k1.t - k0.t
    if k0.out_handle is not None:
        out_dt, out_dv = k0.out_handle
    else:
        out_dt = span / 3.0
        out_dv = _slope(track, seg) * out_dt
    if k1.in_handle is not None:
        in_dt, in_dv = k1.in_handle
    else:
        in_dt = -span / 3.0
        in_dv = _slope(track, seg + 1) * in_dt
    return (
        (k0.t, k0.v),
        (k0.t + out_dt, k0.v + out_dv),
        (k1.t + in_dt, k1.v + in_dv),
        (k1.t, k1.v),
    )


def _cubic(c0: float, c1: float, c2: float, c3: float, u: float) -> float:
    w = 1.0 - u
    return c0 * w * w * w + 3.0 * c1 * w * w * u + 3.0 * c2 * w * u * u + c3 * u * u * u


def sample_segment(controls, t: float) -> float:
    """Value of one Bezier segment at time t via bisection on the time cubic.

    Bisects the curve parameter to interval width 1e-15, well past the
    1e-12 time tolerance, so flat stretches of the time curve cannot leak
    parameter error into the value component.
    """
    (x0, y0), (x1, y1), (x2, y2), (x3, y3) = controls
    if t <= x0:
        return y0
    if t >= x3:
        return y3
    lo, hi = 0.0, 1.0
    while hi - lo > 1e-15:
        u = 0.5 * (lo + hi)
        if _cubic(x0, x1, x2, x3, u) < t:
            lo = u
        else:
            hi = u
    u = 0.5 * (lo + hi)
    return _cubic(y0, y1, y2, y3, u)


def sample_track(track: AnimationTrack, t: float) -> float:
    kfs = track.keyframes
    if t <= kfs[0].t:
        return kfs[0].v
    if t >= kfs[-1].t:
        return kfs[-1].v
    times = [kf.t for kf in kfs]
    seg = bisect_right(times, t) - 1
    if times[seg] == t:  # exact knot: no interpolation drift
        return kfs[seg].v
    return sample_segment(segment_controls(track, seg), t)


def sample(clip: AnimationClip, channel: str, t: float) -> float:
    """Sample one channel of a clip at time t (hold before/after the track)."""
    for track in clip.tracks:
        if track.channel == channel:
            return sample_track(track, t)
    raise UnknownChannelError(channel)
