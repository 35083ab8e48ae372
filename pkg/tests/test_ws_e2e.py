"""Full-stack WebSocket tests against a real uvicorn server.

These cover the wire path the face client actually uses: TCP, HTTP
upgrade, the broker fan-out, and concurrent multi-robot execution.
"""

import json
import threading
import time
from concurrent.futures import ThreadPoolExecutor

import httpx
import pytest
import uvicorn
from websockets.sync.client import connect as ws_connect

from animatron.clock import VirtualClock
from animatron.config import AppConfig
from animatron.engine import Engine
from animatron.server.app import create_app


@pytest.fixture(scope="module")
def server(tmp_path_factory):
    cfg = AppConfig(cache_dir=tmp_path_factory.mktemp("cache"))
    engine = Engine(cfg, clock=VirtualClock())
    app = create_app(cfg, engine=engine)
    config = uvicorn.Config(app, host="127.0.0.1", port=0, log_level="warning")
    srv = uvicorn.Server(config)
    thread = threading.Thread(target=srv.run, daemon=True)
    thread.start()
    deadline = time.time() + 10
    while not srv.started:
        if time.time() > deadline:
            raise RuntimeError("server did not start")
        time.sleep(0.01)
    port = srv.servers[0].sockets[0].getsockname()[1]
    yield f"127.0.0.1:{port}"
    srv.should_exit = True
    thread.join(timeout=5)


def _collect(url: str, count: int, out: list, ready: threading.Event):
    with ws_connect(url) as ws:
        ready.set()
        for _ in range(count):
            out.append(json.loads(ws.recv(timeout=20)))


def test_say_streams_face_messages_over_websocket(server):
    messages: list = []
    ready = threading.Event()
    # "hello" produces exactly: audio start + visemes aa E nn oh + closing sil
    collector = threading.Thread(
        target=_collect, args=(f"ws://{server}/robot/solo", 6, messages, ready), daemon=True
    )
    collector.start()
    assert ready.wait(5)
    resp = httpx.post(f"http://{server}/robot/solo/say", json={"request": "hello"}, timeout=30)
    assert resp.status_code == 200
    collector.join(timeout=20)
    assert len(messages) == 6
    assert messages[0]["type"] == "audio"
    types = [m["type"] for m in messages]
    assert "viseme" in types
    seqs = [m["seq"] for m in messages]
    assert seqs == list(range(1, len(seqs) + 1))


def test_concurrent_robots_disjoint_fifo_streams(server):
    logs = {"A": [], "B": []}
    ready_a, ready_b = threading.Event(), threading.Event()
    # each robot emits: 1 audio + visemes (hello -> 4 + sil) = 6 face messages
    col_a = threading.Thread(
        target=_collect, args=(f"ws://{server}/robot/A", 6, logs["A"], ready_a), daemon=True
    )
    col_b = threading.Thread(
        target=_collect, args=(f"ws://{server}/robot/B", 6, logs["B"], ready_b), daemon=True
    )
    col_a.start(), col_b.start()
    assert ready_a.wait(5) and ready_b.wait(5)

    def say(robot, text):
        return httpx.post(
            f"http://{server}/robot/{robot}/say", json={"request": text}, timeout=30
        ).status_code

    with ThreadPoolExecutor(max_workers=2) as pool:
        fa = pool.submit(say, "A", "hello")
        fb = pool.submit(say, "B", "hello")
        assert fa.result() == 200 and fb.result() == 200
    col_a.join(timeout=20), col_b.join(timeout=20)

    for robot, log in logs.items():
        assert len(log) == 6
        assert all(m["robot"] == robot for m in log), f"cross-robot message in {robot}'s stream"
        seqs = [m["seq"] for m in log]
        assert seqs == sorted(seqs) and len(set(seqs)) == len(seqs)


def test_disconnecting_client_does_not_stall_others(server):
    stable: list = []
    ready = threading.Event()
    collector = threading.Thread(
        target=_collect, args=(f"ws://{server}/robot/CR", 3, stable, ready), daemon=True
    )
    collector.start()
    assert ready.wait(5)
    # a second client connects and immediately drops
    flaky = ws_connect(f"ws://{server}/robot/CR")
    flaky.close()
    for symbol in ("aa", "E", "sil"):
        httpx.post(
            f"http://{server}/robot/CR/face",
            json={"type": "viseme", "symbol": symbol},
            timeout=10,
        )
    collector.join(timeout=20)
    assert [m["payload"]["symbol"] for m in stable] == ["aa", "E", "sil"]
