"""Timeline execution: one executor per robot, driven by a pluggable clock.

The executor expands a compiled Timeline into a flat, time-sorted dispatch
list (audio start, visemes, expression/gaze commands, and per-frame body
poses + face channels for every triggered animation), then walks it,
sleeping until each item is due.  Under a VirtualClock the walk is exact
and fully deterministic; under the wall clock the scheduler tick bounds
dispatch latency.

A new run for the same robot preempts the one in progress: the running
walk stops between items, the face is returned to neutral, and no further
events from the old timeline are dispatched.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable

from animatron.animation.library import ClipLibrary
from animatron.animation.player import play
from animatron.clock import Clock
from animatron.dialogue.timeline import Timeline
from animatron.face import (
    SUPPORTED_AUS,
    VISEMES,
    action_units_message,
    audio_message,
    expression_message,
    gaze_message,
    look_reset_message,
    viseme_message,
)
from animatron.kinematics.pose import Pose6

SCHEDULER_TICK = 0.01  # seconds; dispatch deadline granularity

_BODY = ("x", "y", "z", "roll", "pitch", "yaw")


class SinkDisconnectedError(RuntimeError):
    def __init__(self, robot: str, sink: str):
        self.robot, self.sink = robot, sink
        super().__init__(f"robot {robot!r}: {sink} sink disconnected")


@dataclass
class RobotSinks:
    """Where dispatched events go: face messages and body poses."""

    face: Callable[[dict], None]
    body: Callable[[Pose6, float], None]


@dataclass(frozen=True)
class DispatchRecord:
    scheduled: float
    actual: float
    sink: str
    kind: str
    detail: str = ""

    @property
    def deviation(self) -> float:
        return abs(self.actual - self.scheduled)


@dataclass
class ExecutionReport:
    robot: str
    records: list[DispatchRecord] = field(default_factory=list)
    preempted: bool = False
    error: str | None = None

    @property
    def max_deviation(self) -> float:
        return max((r.deviation for r in self.records), default=0.0)

    def kinds(self) -> list[str]:
        return [r.kind for r in self.records]


@dataclass(frozen=True)
class _Item:
    time: float
    seq: int
    sink: str  # "face" | "body"
    kind: str
    payload: object
    detail: str = ""


def _au_side(channel: str) -> tuple[int, str]:
    name = channel[2:]
    for side in ("left", "right"):
        if name.endswith("." + side):
            return int(name[: -len(side) - 1]), side
    return int(name), "both"


def expand_timeline(timeline: Timeline, clips: ClipLibrary, frame_rate: float) -> list[_Item]:
    items: list[_Item] = []
    seq = 0

    def add(time: float, sink: str, kind: str, payload, detail: str = ""):
        nonlocal seq
        items.append(_Item(time, seq, sink, kind, payload, detail))
        seq += 1

    add(0.0, "face", "audio", audio_message(timeline.speech.duration, timeline.audio_key))
    for ev in timeline.visemes:
        add(ev.time, "face", "viseme", viseme_message(ev.viseme), ev.viseme)
    for b in timeline.behaviors:
        if b.kind == "expression":
            add(b.time, "face", "expression", expression_message(b.name), b.name)
        elif b.kind == "gaze":
            if b.name == "reset":
                add(b.time, "face", "look_reset", look_reset_message())
            else:
                add(b.time, "face", "gaze", gaze_message(*b.args))
        else:  # animation: expand into frames
            clip = clips.get(b.name)
            for frame in play(clip, frame_rate):
                t = b.time + frame.t
                body = {ch: frame.values[ch] for ch in _BODY if ch in frame.values}
                if body:
                    pose = Pose6(**{ch: body.get(ch, 0.0) for ch in _BODY})
                    add(t, "body", "pose", pose, b.name)
                # interpolation may overshoot between in-range keyframes;
                # face intensities clamp to their legal range at dispatch
                aus = [
                    (*_au_side(ch), min(1.0, max(0.0, val)))
                    for ch, val in frame.values.items()
                    if ch.startswith("au")
                ]
                if aus:
                    add(t, "face", "action_units", action_units_message(aus), b.name)
                if "viseme" in frame.values:
                    idx = min(len(VISEMES) - 1, max(0, round(frame.values["viseme"])))
                    add(t, "face", "viseme", viseme_message(VISEMES[idx]), b.name)
                gaze = {ch: v for ch, v in frame.values.items() if ch.startswith("gaze.")}
                if gaze:
                    point = (gaze.get("gaze.x", 0.0), gaze.get("gaze.y", 0.0), gaze.get("gaze.z", 0.6))
                    add(t, "face", "gaze", gaze_message(*point), b.name)
    items.sort(key=lambda it: (it.time, it.seq))
    return items


NEUTRAL_FACE_SEQUENCE = (
    ("viseme", viseme_message("sil")),
    ("action_units", action_units_message([(au, "both", 0.0) for au in SUPPORTED_AUS])),
    ("look_reset", look_reset_message()),
)


class Executor:
    """Per-robot timeline runner with preemption."""

    def __init__(
        self,
        robot: str,
        sinks: RobotSinks,
        clock: Clock,
        clips: ClipLibrary,
        frame_rate: float = 50.0,
        tick: float = SCHEDULER_TICK,
    ):
        self.robot = robot
        self.sinks = sinks
        self.clock = clock
        self.clips = clips
        self.frame_rate = frame_rate
        self.tick = tick
        self._lock = threading.Lock()
        self._preempt = threading.Event()

    def preempt(self) -> None:
        self._preempt.set()

    def run(self, timeline: Timeline) -> ExecutionReport:
        """Execute a timeline to completion (blocking); preempts any active run."""
        items = expand_timeline(timeline, self.clips, self.frame_rate)
        self._preempt.set()
        with self._lock:
            self._preempt.clear()
            report = ExecutionReport(robot=self.robot)
            t0 = self.clock.now()
            for item in items:
                target = t0 + item.time
                while self.clock.now() < target:
                    if self._preempt.is_set():
                        break
                    self.clock.sleep_until(min(target, self.clock.now() + self.tick))
                if self._preempt.is_set():
                    report.preempted = True
                    self._reset_face(report, t0)
                    break
                actual = self.clock.now() - t0
                try:
                    self._dispatch(item)
                except SinkDisconnectedError as e:
                    report.error = str(e)
                    report.records.append(
                        DispatchRecord(item.time, actual, item.sink, item.kind, "DROPPED: " + str(e))
                    )
                    break
                report.records.append(
                    DispatchRecord(item.time, actual, item.sink, item.kind, item.detail)
                )
            return report

    def _dispatch(self, item: _Item) -> None:
        if item.sink == "face":
            self.sinks.face(item.payload)
        else:
            self.sinks.body(item.payload, item.time)

    def _reset_face(self, report: ExecutionReport, t0: float) -> None:
        now = self.clock.now() - t0
        for kind, msg in NEUTRAL_FACE_SEQUENCE:
            try:
                self.sinks.face(msg)
            except SinkDisconnectedError:
                return
            report.records.append(DispatchRecord(now, now, "face", kind, "preempt-reset"))
