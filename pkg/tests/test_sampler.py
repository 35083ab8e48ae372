import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from animatron.animation.channels import UnknownChannelError
from animatron.animation.clip import AnimationClip, AnimationTrack, Keyframe
from animatron.animation.sampler import sample, sample_segment, segment_controls
from tests.support import oracle_bezier_value


def one_track_clip(keyframes, channel="z"):
    return AnimationClip("t", (AnimationTrack(channel, tuple(keyframes)),))


def random_segment(rng: random.Random):
    """A valid (time, value) cubic segment with random explicit handles."""
    t0 = rng.uniform(0.0, 5.0)
    span = rng.uniform(0.05, 3.0)
    t1 = t0 + span
    v0, v1 = rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05)
    out = (rng.uniform(0, span), rng.uniform(-0.05, 0.05))
    inh = (-rng.uniform(0, span), rng.uniform(-0.05, 0.05))
    k0 = Keyframe(t0, v0, out_handle=out)
    k1 = Keyframe(t1, v1, in_handle=inh)
    return AnimationTrack("z", (k0, k1))


def test_exact_value_at_keyframes():
    kfs = [Keyframe(0.0, 0.013), Keyframe(0.4, -0.021), Keyframe(1.1, 0.037)]
    clip = one_track_clip(kfs)
    for kf in kfs:
        assert sample(clip, "z", kf.t) == kf.v  # bit-for-bit


def test_collinear_handles_degenerate_to_linear():
    track = AnimationTrack(
        "z",
        (
            Keyframe(0.0, 0.0, out_handle=(1 / 3, 1 / 3 * 0.06)),
            Keyframe(1.0, 0.06, in_handle=(-1 / 3, -1 / 3 * 0.06)),
        ),
    )
    clip = AnimationClip("lin", (track,))
    for t in (0.1, 0.25, 0.5, 0.75, 0.9):
        assert sample(clip, "z", t) == pytest.approx(0.06 * t, abs=1e-12)


def test_matches_decasteljau_oracle():
    rng = random.Random(1234)
    for _ in range(2000):
        track = random_segment(rng)
        controls = segment_controls(track, 0)
        t = rng.uniform(track.keyframes[0].t, track.keyframes[1].t)
        got = sample_segment(controls, t)
        want = oracle_bezier_value(*controls, t)
        assert got == pytest.approx(want, abs=1e-12)


def test_hold_semantics():
    clip = one_track_clip([Keyframe(0.2, 0.01), Keyframe(1.0, 0.04)])
    assert sample(clip, "z", 0.0) == 0.01
    assert sample(clip, "z", 5.0) == 0.04


def test_single_keyframe_constant():
    clip = one_track_clip([Keyframe(0.5, 0.02)])
    for t in (0.0, 0.5, 2.0):
        assert sample(clip, "z", t) == 0.02


def test_default_handles_reproduce_straight_lines():
    # Catmull-Rom slopes on collinear keyframes give back the line
    kfs = [Keyframe(0.0, 0.0), Keyframe(0.5, 0.015), Keyframe(1.5, 0.045), Keyframe(2.0, 0.06)]
    clip = one_track_clip(kfs)
    for t in (0.1, 0.33, 0.77, 1.2, 1.9):
        assert sample(clip, "z", t) == pytest.approx(0.03 * t, abs=1e-12)


def test_determinism():
    rng = random.Random(7)
    track = random_segment(rng)
    clip = AnimationClip("d", (track,))
    t = 0.5 * (track.keyframes[0].t + track.keyframes[1].t)
    assert sample(clip, "z", t) == sample(clip, "z", t)


def test_unknown_channel():
    clip = one_track_clip([Keyframe(0.0, 0.0)])
    with pytest.raises(UnknownChannelError):
        sample(clip, "pitch", 0.0)


def test_segment_endpoints_exact():
    # fully stacked handles make the time curve stall at the endpoints;
    # the endpoint values must still come back exactly
    track = AnimationTrack(
        "z",
        (Keyframe(1.0, 0.011, out_handle=(0.0, 0.05)), Keyframe(2.0, -0.023, in_handle=(-0.0, 0.04))),
    )
    controls = segment_controls(track, 0)
    assert sample_segment(controls, 1.0) == 0.011
    assert sample_segment(controls, 2.0) == -0.023


# Handle fractions stay below 1 and q away from the endpoints: with both
# handles spanning the whole segment the time curve develops a vertical
# tangent, where "the value at time t" is ill-conditioned for any solver.
@settings(max_examples=200)
@given(
    t0=st.floats(0, 2),
    span=st.floats(0.01, 2),
    v0=st.floats(-0.05, 0.05),
    v1=st.floats(-0.05, 0.05),
    out_frac=st.floats(0, 0.9),
    in_frac=st.floats(0, 0.9),
    out_dv=st.floats(-0.05, 0.05),
    in_dv=st.floats(-0.05, 0.05),
    q=st.floats(1e-6, 1 - 1e-6),
)
def test_sample_inside_segment_matches_oracle(t0, span, v0, v1, out_frac, in_frac, out_dv, in_dv, q):
    track = AnimationTrack(
        "z",
        (
            Keyframe(t0, v0, out_handle=(out_frac * span, out_dv)),
            Keyframe(t0 + span, v1, in_handle=(-in_frac * span, in_dv)),
        ),
    )
    controls = segment_controls(track, 0)
    t = t0 + q * span
    assert sample_segment(controls, t) == pytest.approx(
        oracle_bezier_value(*controls, t), abs=1e-12
    )
