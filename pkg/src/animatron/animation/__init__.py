from animatron.animation.clip import (
    AnimationClip,
    AnimationTrack,
    ClipError,
    ClipSyntaxError,
    DuplicateChannelError,
    Keyframe,
    SchemaError,
)
from animatron.animation.channels import BODY_CHANNELS, UnknownChannelError, channel_spec
from animatron.animation.library import ClipLibrary, lint_clip
from animatron.animation.parser import clip_to_json, load_clip, parse_clip
from animatron.animation.player import Frame, play
from animatron.animation.sampler import sample

__all__ = [
    "AnimationClip",
    "AnimationTrack",
    "Keyframe",
    "ClipError",
    "ClipSyntaxError",
    "SchemaError",
    "DuplicateChannelError",
    "BODY_CHANNELS",
    "UnknownChannelError",
    "channel_spec",
    "ClipLibrary",
    "lint_clip",
    "parse_clip",
    "clip_to_json",
    "load_clip",
    "Frame",
    "play",
    "sample",
]
