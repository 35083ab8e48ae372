"""Clip library: a directory of .json clips loaded at startup, plus lint."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from animatron.animation.channels import BODY_CHANNELS
from animatron.animation.clip import AnimationClip, ClipError
from animatron.animation.parser import load_clip
from animatron.animation.player import play
from animatron.kinematics.geometry import PlatformGeometry
from animatron.kinematics.pose import Pose6
from animatron.kinematics.solver import validate_pose


class ClipLibrary:
    def __init__(self, clips: dict[str, AnimationClip] | None = None):
        self._clips: dict[str, AnimationClip] = dict(clips or {})

    @classmethod
    def load_dir(cls, path: str | Path) -> "ClipLibrary":
        clips: dict[str, AnimationClip] = {}
        for file in sorted(Path(path).glob("*.json")):
            try:
                clip = load_clip(file)
            except ClipError as e:
                raise ClipError(f"{file.name}: {e}") from None
            if clip.name in clips:
                raise ClipError(f"{file.name}: duplicate clip name {clip.name!r}")
            clips[clip.name] = clip
        return cls(clips)

    def __contains__(self, name: str) -> bool:
        return name in self._clips

    def __len__(self) -> int:
        return len(self._clips)

    def get(self, name: str) -> AnimationClip:
        try:
            return self._clips[name]
        except KeyError:
            raise KeyError(f"no clip named {name!r}") from None

    def names(self) -> list[str]:
        return sorted(self._clips)

    def add(self, clip: AnimationClip) -> None:
        if clip.name in self._clips:
            raise ClipError(f"duplicate clip name {clip.name!r}")
        self._clips[clip.name] = clip


@dataclass(frozen=True)
class LintReport:
    clip: str
    frame_count: int
    invalid_frames: tuple[tuple[float, str], ...]  # (time, reason)

    @property
    def ok(self) -> bool:
        return not self.invalid_frames


def lint_clip(clip: AnimationClip, geom: PlatformGeometry, rate: float = 50.0) -> LintReport:
    """Check that every played frame's body pose is kinematically valid."""
    bad: list[tuple[float, str]] = []
    frames = play(clip, rate)
    for frame in frames:
        body = {ch: frame.values.get(ch, 0.0) for ch in BODY_CHANNELS}
        if not any(ch in frame.values for ch in BODY_CHANNELS):
            continue
        result = validate_pose(Pose6(**body), geom)
        if not result.valid:
            bad.append((frame.t, result.reason))
    return LintReport(clip=clip.name, frame_count=len(frames), invalid_frames=tuple(bad))
