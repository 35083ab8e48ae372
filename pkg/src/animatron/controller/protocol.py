"""Wire protocol for the motor controller: newline-delimited JSON frames.

Commands: {"cmd": "move", "ticks": [6 ints]}, {"cmd": "estop",
"engaged": bool}, {"cmd": "enable"}, {"cmd": "state"}.  Replies are JSON
objects with an "ok" flag.  The transport is any reliable byte stream;
tests use in-process calls.  Protocol version 1.
"""

from __future__ import annotations

import json

PROTOCOL_VERSION = 1

COMMANDS = ("move", "estop", "enable", "state")


class FramingError(ValueError):
    """Malformed wire frame; controller state is left untouched."""


def decode_frame(line: str) -> dict:
    """Parse and validate one wire frame."""
    try:
        frame = json.loads(line)
    except json.JSONDecodeError as e:
        raise FramingError(f"invalid JSON frame: {e.msg}") from None
    if not isinstance(frame, dict):
        raise FramingError(f"frame must be a JSON object, got {type(frame).__name__}")
    cmd = frame.get("cmd")
    if cmd not in COMMANDS:
        raise FramingError(f"unknown command {cmd!r}")
    if cmd == "move":
        ticks = frame.get("ticks")
        if (
            not isinstance(ticks, list)
            or len(ticks) != 6
            or not all(isinstance(t, int) and not isinstance(t, bool) for t in ticks)
        ):
            raise FramingError("move frame requires 'ticks': list of 6 integers")
    elif cmd == "estop":
        if not isinstance(frame.get("engaged"), bool):
            raise FramingError("estop frame requires boolean 'engaged'")
    return frame


def encode_frame(frame: dict) -> str:
    return json.dumps(frame, separators=(",", ":"))
