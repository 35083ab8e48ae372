"""Per-robot WebSocket fan-out with per-client ordered sequence numbers.

One sequencer per (robot, client) stream: every message a client receives
carries a seq strictly one above its previous, so gaps betray dropped
messages.  A slow or dead client gets disconnected rather than ever
stalling delivery to the others.  Late joiners first receive a snapshot
replay (latest face config and expression state) so they render correctly.
"""

from __future__ import annotations

import asyncio
import json
import logging
from dataclasses import dataclass, field

from animatron.face import FACE_SCHEMA_VERSION

logger = logging.getLogger(__name__)

QUEUE_LIMIT = 1024


@dataclass
class _Client:
    queue: asyncio.Queue = field(default_factory=lambda: asyncio.Queue(maxsize=QUEUE_LIMIT))
    seq: int = 0
    dead: bool = False


class _Channel:
    def __init__(self, robot: str):
        self.robot = robot
        self.clients: list[_Client] = []
        self.last_face_config: dict | None = None
        self.last_expression: dict | None = None


def envelope(robot: str, seq: int, msg: dict) -> str:
    payload = {k: v for k, v in msg.items() if k != "type"}
    return json.dumps(
        {"v": FACE_SCHEMA_VERSION, "robot": robot, "seq": seq, "type": msg["type"], "payload": payload},
        separators=(",", ":"),
    )


class FaceBroker:
    """Thread-safe publish fan-out bound to one asyncio event loop."""

    def __init__(self):
        self._loop: asyncio.AbstractEventLoop | None = None
        self._channels: dict[str, _Channel] = {}

    def bind_loop(self, loop: asyncio.AbstractEventLoop) -> None:
        self._loop = loop

    def _channel(self, robot: str) -> _Channel:
        ch = self._channels.get(robot)
        if ch is None:
            ch = self._channels[robot] = _Channel(robot)
        return ch

    # -- called from any thread ---------------------------------------------

    def publish(self, robot: str, msg: dict) -> None:
        if self._loop is None:
            raise RuntimeError("broker not bound to an event loop yet")
        try:
            running = asyncio.get_running_loop()
        except RuntimeError:
            running = None
        if running is self._loop:
            self._publish(robot, msg)
        else:
            self._loop.call_soon_threadsafe(self._publish, robot, msg)

    # -- loop-side ------------------------------------------------------------

    def _publish(self, robot: str, msg: dict) -> int:
        ch = self._channel(robot)
        if msg["type"] == "face_config":
            ch.last_face_config = msg
        elif msg["type"] == "action_units":
            ch.last_expression = msg
        delivered = 0
        for client in ch.clients:
            if client.dead:
                continue
            client.seq += 1
            try:
                client.queue.put_nowait(envelope(robot, client.seq, msg))
                delivered += 1
            except asyncio.QueueFull:
                # never let one stuck client stall the rest; its sender
                # loop notices the dead flag and closes the socket
                client.dead = True
        if delivered == 0:
            logger.debug("no subscribers for robot %s (%s)", robot, msg["type"])
        return delivered

    def subscribe(self, robot: str) -> _Client:
        ch = self._channel(robot)
        client = _Client()
        for snapshot in (ch.last_face_config, ch.last_expression):
            if snapshot is not None:
                client.seq += 1
                client.queue.put_nowait(envelope(robot, client.seq, snapshot))
        ch.clients.append(client)
        return client

    def unsubscribe(self, robot: str, client: _Client) -> None:
        client.dead = True
        ch = self._channels.get(robot)
        if ch and client in ch.clients:
            ch.clients.remove(client)

    def subscriber_count(self, robot: str) -> int:
        ch = self._channels.get(robot)
        return len([c for c in ch.clients if not c.dead]) if ch else 0
