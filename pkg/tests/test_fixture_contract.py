import json
from pathlib import Path

import pytest

from scripts.gen_face_fixture import FIXTURE_PATH, fixture_messages


def test_checked_in_fixture_is_current():
    """The face client's contract fixture must match what the bridge emits."""
    if not FIXTURE_PATH.exists():
        pytest.fail(f"fixture missing; run scripts/gen_face_fixture.py ({FIXTURE_PATH})")
    on_disk = json.loads(FIXTURE_PATH.read_text())
    fresh = [json.loads(line) for line in fixture_messages()]
    assert on_disk == fresh, "fixture stale; rerun scripts/gen_face_fixture.py"


def test_fixture_covers_every_emitted_type():
    types = {json.loads(line)["type"] for line in fixture_messages()}
    assert types == {
        "viseme",
        "action_units",
        "gaze",
        "look_reset",
        "face_config",
        "audio",
        "pose",
    }
