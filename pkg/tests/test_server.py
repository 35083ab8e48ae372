import json

import pytest
from fastapi.testclient import TestClient

from animatron.clock import VirtualClock
from animatron.config import AppConfig
from animatron.engine import Engine
from animatron.server.app import create_app


@pytest.fixture
def client(tmp_path):
    cfg = AppConfig(cache_dir=tmp_path / "cache")
    engine = Engine(cfg, clock=VirtualClock())
    app = create_app(cfg, engine=engine)
    with TestClient(app) as c:
        c.engine = engine
        yield c


def test_healthz(client):
    body = client.get("/healthz").json()
    assert body["ok"] is True


def test_say_returns_report(client):
    resp = client.post("/robot/r1/say", json={"request": "Hello world!"})
    assert resp.status_code == 200
    report = resp.json()
    assert report["robot"] == "r1"
    kinds = [r["kind"] for r in report["records"]]
    assert kinds[0] == "audio"
    assert "viseme" in kinds
    assert report["max_deviation"] == 0.0


def test_say_unknown_animation_is_422(client):
    resp = client.post("/robot/r1/say", json={"request": "x <anim:bogus> y"})
    assert resp.status_code == 422
    assert "bogus" in resp.json()["detail"]


def test_pose_roundtrip(client):
    resp = client.post("/robot/r1/pose", json={"z": 0.02})
    assert resp.status_code == 200
    assert len(resp.json()["ticks"]) == 6


def test_invalid_pose_rejected_no_frames(client):
    resp = client.post("/robot/r1/pose", json={"z": 0.30})
    assert resp.status_code == 422
    assert "unreachable" in resp.json()["detail"]
    rt = client.engine.robot("r1")
    assert rt.controller.move_frames_sent() == 0


def test_anim_endpoints(client):
    assert "happy_dance" in client.get("/clips").json()["clips"]
    assert client.post("/robot/r1/anim", json={"name": "ghost"}).status_code == 404
    report = client.post("/robot/r1/anim", json={"name": "nod"}).json()
    assert any(r["kind"] == "pose" for r in report["records"])
    doc = client.get("/clips/nod").json()
    assert doc["name"] == "nod"


def test_lint_endpoint(client):
    good = json.dumps(
        {"name": "ok", "tracks": [{"channel": "z", "keyframes": [{"t": 0, "v": 0.01}]}]}
    )
    resp = client.post("/clips/lint", json={"clip": good})
    assert resp.status_code == 200 and resp.json()["ok"] is True
    bad_schema = '{"name": "x", "tracks": [{"channel": "nope", "keyframes": [{"t": 0, "v": 0}]}]}'
    assert client.post("/clips/lint", json={"clip": bad_schema}).status_code == 422
    unreachable = json.dumps(
        {"name": "far", "tracks": [{"channel": "z", "keyframes": [{"t": 0, "v": 0.09}]}]}
    )
    resp = client.post("/clips/lint", json={"clip": unreachable})
    assert resp.status_code == 200 and resp.json()["ok"] is False


def test_workspace_endpoint(client):
    body = client.get("/workspace", params={"translation_resolution": 0.005, "tilt_resolution_deg": 4}).json()
    assert body["geometry_claims"]["max_translation_m"]["z"] >= 0.04


def test_prefetch_endpoint(client):
    body = client.post("/prefetch", json={}).json()
    assert body["entries"] == 3
    assert body["cache_entries"] == 3


def test_estop_endpoints(client):
    client.post("/robot/r1/pose", json={"z": 0.02})
    assert client.post("/robot/r1/estop", json={"engaged": True}).json()["ok"]
    state = client.get("/robot/r1/state").json()
    assert state["estop_latched"] is True and state["torque_enabled"] is False
    client.post("/robot/r1/estop", json={"engaged": False})
    client.post("/robot/r1/enable")
    state = client.get("/robot/r1/state").json()
    assert state["estop_latched"] is False and state["torque_enabled"] is True


def test_face_command_validation(client):
    assert client.post("/robot/r1/face", json={"type": "viseme", "symbol": "aa"}).status_code == 200
    assert client.post("/robot/r1/face", json={"type": "viseme", "symbol": "zz"}).status_code == 422
    assert (
        client.post(
            "/robot/r1/face",
            json={"type": "action_units", "units": [{"au": 12, "intensity": 2.0}]},
        ).status_code
        == 422
    )


def test_websocket_receives_commands_in_order(client):
    with client.websocket_connect("/robot/A") as ws:
        for i in range(200):
            client.post("/robot/A/face", json={"type": "viseme", "symbol": "aa" if i % 2 else "E"})
        seqs, types = [], []
        for _ in range(200):
            msg = json.loads(ws.receive_text())
            assert msg["v"] == 1 and msg["robot"] == "A"
            seqs.append(msg["seq"])
            types.append(msg["type"])
        assert seqs == list(range(1, 201))  # strictly increasing, no gaps
        assert set(types) == {"viseme"}


def test_websocket_namespace_isolation(client):
    with client.websocket_connect("/robot/A") as ws_a, client.websocket_connect("/robot/B") as ws_b:
        client.post("/robot/A/face", json={"type": "viseme", "symbol": "aa"})
        client.post("/robot/B/face", json={"type": "look_reset"})
        msg_a = json.loads(ws_a.receive_text())
        msg_b = json.loads(ws_b.receive_text())
        assert msg_a["robot"] == "A" and msg_a["type"] == "viseme"
        assert msg_b["robot"] == "B" and msg_b["type"] == "look_reset"


def test_late_joiner_gets_config_and_expression_replay(client):
    client.post("/robot/A/face", json={"type": "face_config", "config": {"colors": {"iris": "#3a6"}}})
    client.post(
        "/robot/A/face",
        json={"type": "action_units", "units": [{"au": 12, "side": "both", "intensity": 0.8}]},
    )
    with client.websocket_connect("/robot/A") as ws:
        first = json.loads(ws.receive_text())
        second = json.loads(ws.receive_text())
        assert first["type"] == "face_config"
        assert first["payload"]["config"]["colors"]["iris"] == "#3a6"
        assert second["type"] == "action_units"
        assert second["seq"] == first["seq"] + 1


def test_gaze_track_endpoints(client):
    gen = client.post("/robot/A/gaze/track", json={"target_id": "person"}).json()["track"]
    ok = client.post("/robot/A/gaze/update", json={"track": gen, "point": [0.2, 0.0, 0.8]}).json()
    assert ok["forwarded"] is True
    gen2 = client.post("/robot/A/gaze/track", json={"target_id": "toy"}).json()["track"]
    stale = client.post("/robot/A/gaze/update", json={"track": gen, "point": [0.3, 0.0, 0.8]}).json()
    assert stale["forwarded"] is False
    assert client.post("/robot/A/gaze/stop", json={"track": gen2}).json()["stopped"] is True


def test_audio_served_from_cache(client):
    client.post("/robot/r1/say", json={"request": "hello"})
    # the timeline carried a cache key; fetch it via the report
    from animatron.dialogue.cache import cache_key

    key = cache_key(client.engine.tts.voice, "hello")
    resp = client.get(f"/audio/{key}")
    assert resp.status_code == 200
    assert resp.headers["content-type"] == "audio/wav"
    assert resp.content[:4] == b"RIFF"
    assert client.get("/audio/feedbeef").status_code == 404
