"""Regenerate the face client's bridge-message contract fixture.

Builds one enveloped example of every message type the bridge can emit
and writes them to frontend/test/fixtures/bridge_messages.json.  The
face client's contract test must accept and apply every one of them;
tests/test_fixture_contract.py keeps the checked-in copy current.

Usage: python scripts/gen_face_fixture.py
"""

from __future__ import annotations

import json
from pathlib import Path

from animatron.face import (
    action_units_message,
    audio_message,
    expression_message,
    face_config_message,
    gaze_message,
    look_reset_message,
    pose_message,
    viseme_message,
)
from animatron.server.broker import envelope

FIXTURE_PATH = Path(__file__).resolve().parent.parent / "frontend" / "test" / "fixtures" / "bridge_messages.json"


def fixture_messages() -> list[str]:
    robot = "fixture"
    msgs = [
        viseme_message("aa"),
        viseme_message("sil"),
        action_units_message([(12, "both", 1.0), (2, "left", 0.5)]),
        expression_message("surprise"),
        gaze_message(0.25, -0.1, 0.8),
        look_reset_message(),
        face_config_message(
            {
                "colors": {"skin": "#ffd9a0", "iris": "#3a86ff", "mouth": "#b5432a"},
                "pupil_shape": "round",
                "element_sizes": {"mouth_scale": 1.1, "brow_scale": 0.9},
            }
        ),
        audio_message(0.64, "0" * 64),
        pose_message((0.0, 0.0, 0.02, 0.1, -0.2, 0.05), 0.5),
    ]
    return [envelope(robot, seq, msg) for seq, msg in enumerate(msgs, start=1)]


def main() -> None:
    FIXTURE_PATH.parent.mkdir(parents=True, exist_ok=True)
    lines = fixture_messages()
    FIXTURE_PATH.write_text(json.dumps([json.loads(ln) for ln in lines], indent=2) + "\n")
    print(f"wrote {len(lines)} messages to {FIXTURE_PATH}")


if __name__ == "__main__":
    main()
