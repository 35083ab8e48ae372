"""Strict JSON clip parser and serializer.

Schema (version-free; the clip format is additive-only by policy):

    {
      "name": "happy_dance",
      "tracks": [
        {
          "channel": "z",
          "keyframes": [
            {"t": 0.0, "v": 0.0},
            {"t": 0.5, "v": 0.02, "out": [0.1, 0.0], "in": [-0.1, 0.0]}
          ]
        }
      ]
    }

"out"/"in" are optional (dt, dv) handle offsets; omitted handles get
Catmull-Rom defaults at sample time.  Unknown keys, unknown channels and
non-monotonic times are hard errors.
"""

from __future__ import annotations

import json
from pathlib import Path

from animatron.animation.clip import (
    AnimationClip,
    AnimationTrack,
    ClipSyntaxError,
    Keyframe,
    SchemaError,
)

_KEYFRAME_KEYS = {"t", "v", "out", "in"}
_TRACK_KEYS = {"channel", "keyframes"}
_TOP_KEYS = {"name", "tracks"}


def _require(cond: bool, path: str, reason: str) -> None:
    if not cond:
        raise SchemaError(path, reason)


def _number(value, path: str) -> float:
    _require(isinstance(value, (int, float)) and not isinstance(value, bool), path, "must be a number")
    return float(value)


def _handle(value, path: str) -> tuple[float, float]:
    _require(isinstance(value, list) and len(value) == 2, path, "must be a [dt, dv] pair")
    return (_number(value[0], f"{path}[0]"), _number(value[1], f"{path}[1]"))


def _keyframe(obj, path: str) -> Keyframe:
    _require(isinstance(obj, dict), path, "must be an object")
    unknown = set(obj) - _KEYFRAME_KEYS
    _require(not unknown, path, f"unknown keys {sorted(unknown)}")
    _require("t" in obj and "v" in obj, path, "requires 't' and 'v'")
    try:
        return Keyframe(
            t=_number(obj["t"], f"{path}.t"),
            v=_number(obj["v"], f"{path}.v"),
            out_handle=_handle(obj["out"], f"{path}.out") if "out" in obj else None,
            in_handle=_handle(obj["in"], f"{path}.in") if "in" in obj else None,
        )
    except SchemaError:
        raise
    except ValueError as e:
        raise SchemaError(path, str(e)) from None


def _track(obj, path: str) -> AnimationTrack:
    _require(isinstance(obj, dict), path, "must be an object")
    unknown = set(obj) - _TRACK_KEYS
    _require(not unknown, path, f"unknown keys {sorted(unknown)}")
    _require(isinstance(obj.get("channel"), str), f"{path}.channel", "must be a string")
    frames = obj.get("keyframes")
    _require(isinstance(frames, list) and frames, f"{path}.keyframes", "must be a nonempty array")
    keyframes = [_keyframe(kf, f"{path}.keyframes[{i}]") for i, kf in enumerate(frames)]
    return AnimationTrack(channel=obj["channel"], keyframes=tuple(keyframes))


def parse_clip(text: str) -> AnimationClip:
    """Parse a clip document; errors name the offending JSON path."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ClipSyntaxError(e.lineno, e.colno, e.msg) from None
    _require(isinstance(doc, dict), "$", "top level must be an object")
    unknown = set(doc) - _TOP_KEYS
    _require(not unknown, "$", f"unknown keys {sorted(unknown)}")
    _require(isinstance(doc.get("name"), str) and doc["name"], "name", "must be a nonempty string")
    tracks_doc = doc.get("tracks")
    _require(isinstance(tracks_doc, list), "tracks", "must be an array")
    tracks = [_track(t, f"tracks[{i}]") for i, t in enumerate(tracks_doc)]
    return AnimationClip(name=doc["name"], tracks=tuple(tracks))


def clip_to_json(clip: AnimationClip, indent: int = 2) -> str:
    doc = {
        "name": clip.name,
        "tracks": [
            {
                "channel": tr.channel,
                "keyframes": [
                    {
                        "t": kf.t,
                        "v": kf.v,
                        **({"out": list(kf.out_handle)} if kf.out_handle is not None else {}),
                        **({"in": list(kf.in_handle)} if kf.in_handle is not None else {}),
                    }
                    for kf in tr.keyframes
                ],
            }
            for tr in clip.tracks
        ],
    }
    return json.dumps(doc, indent=indent)


def load_clip(path: str | Path) -> AnimationClip:
    return parse_clip(Path(path).read_text(encoding="utf-8"))
