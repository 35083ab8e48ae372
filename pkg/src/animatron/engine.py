"""The engine: per-robot runtime assembly over the shared core modules.

One Engine holds the geometry, clip and dialogue libraries, TTS client and
speech cache; each robot id gets its own executor, simulated controller
and face-message publisher on first use.  The engine enforces the
kinematic software limit: a pose that fails validation is dropped before
any controller frame is generated, whether it came from a direct command
or from animation playback.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from animatron.animation.library import ClipLibrary, LintReport, lint_clip
from animatron.clock import Clock, WallClock
from animatron.config import AppConfig
from animatron.controller.calibration import angles_to_ticks
from animatron.controller.sim import ServoControllerSim
from animatron.dialogue.cache import SpeechCache
from animatron.dialogue.executor import ExecutionReport, Executor, RobotSinks
from animatron.dialogue.library import DialogueLibrary, resolve
from animatron.dialogue.timeline import Timeline, schedule
from animatron.dialogue.tts import HttpTts, StubTts, synthesize
from animatron.face import gaze_message, look_reset_message, pose_message
from animatron.kinematics.geometry import load_geometry
from animatron.kinematics.pose import Pose6
from animatron.kinematics.solver import validate_pose
from animatron.kinematics.workspace import WorkspaceReport, sample_workspace


class PoseRejectedError(ValueError):
    """Kinematic validation refused the pose; nothing was sent."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"pose rejected: {reason}")


@dataclass
class RobotRuntime:
    robot: str
    executor: Executor | None
    controller: ServoControllerSim
    face_send: object  # Callable[[dict], None]
    dropped_poses: int = 0
    tracked_target: str | None = None
    track_generation: int = 0
    _track_lock: threading.Lock = field(default_factory=threading.Lock)


class Engine:
    def __init__(
        self,
        config: AppConfig,
        clock: Clock | None = None,
        tts=None,
        face_publisher=None,
    ):
        """face_publisher: Callable[[robot_id, message_dict], None].

        Defaults to an in-memory per-robot log (engine.face_log), which the
        server replaces with the WebSocket broker's publish.
        """
        self.config = config
        self.clock = clock or WallClock()
        self.geometry = load_geometry(config.resolved_geometry_path())
        self.clips = ClipLibrary.load_dir(config.resolved_clips_dir())
        self.library = DialogueLibrary.load(config.resolved_library_path())
        self.cache = SpeechCache(config.cache_dir)
        if tts is not None:
            self.tts = tts
        elif config.tts.mode == "http":
            self.tts = HttpTts(config.tts.endpoint, voice=config.tts.voice)
        else:
            self.tts = StubTts(voice=config.tts.voice)
        self.face_log: dict[str, list[dict]] = {}
        self._face_publisher = face_publisher or self._log_face
        self._robots: dict[str, RobotRuntime] = {}
        self._robots_lock = threading.Lock()

    # -- robot lifecycle ------------------------------------------------------

    def _log_face(self, robot: str, msg: dict) -> None:
        self.face_log.setdefault(robot, []).append(msg)

    def set_face_publisher(self, publisher) -> None:
        self._face_publisher = publisher
        for rt in self._robots.values():
            rt.face_send = self._make_face_send(rt.robot)

    def _make_face_send(self, robot: str):
        def send(msg: dict) -> None:
            self._face_publisher(robot, msg)

        return send

    def robot(self, robot_id: str) -> RobotRuntime:
        if not robot_id or not all(c.isalnum() or c in "_-" for c in robot_id):
            raise ValueError(f"invalid robot id {robot_id!r}")
        with self._robots_lock:
            rt = self._robots.get(robot_id)
            if rt is None:
                rt = self._build_robot(robot_id)
                self._robots[robot_id] = rt
            return rt

    def robots(self) -> list[str]:
        return sorted(self._robots)

    def _build_robot(self, robot_id: str) -> RobotRuntime:
        controller = ServoControllerSim(calibration=self.geometry.calibration)
        face_send = self._make_face_send(robot_id)
        rt = RobotRuntime(robot=robot_id, executor=None, controller=controller, face_send=face_send)

        def body_sink(pose: Pose6, t: float) -> None:
            self._command_pose(rt, pose, raise_on_invalid=False)

        def face_sink(msg: dict) -> None:
            rt.face_send(msg)

        rt.executor = Executor(
            robot_id,
            RobotSinks(face=face_sink, body=body_sink),
            self.clock,
            self.clips,
            frame_rate=self.config.frame_rate,
        )
        return rt

    # -- pose / controller path -------------------------------------------

    def _command_pose(self, rt: RobotRuntime, pose: Pose6, raise_on_invalid: bool) -> dict:
        result = validate_pose(pose, self.geometry)
        if not result.valid:
            rt.dropped_poses += 1
            if raise_on_invalid:
                raise PoseRejectedError(result.reason)
            return {"sent": False, "reason": result.reason}
        rt.controller.advance_to(self.clock.now())
        ticks = angles_to_ticks(result.angles, self.geometry.calibration)
        ack = rt.controller.command(ticks)
        rt.face_send(pose_message(pose.as_tuple(), self.clock.now()))
        return {"sent": True, "angles": list(result.angles), "ticks": ticks, "ack": ack}

    def set_pose(self, robot_id: str, pose: Pose6) -> dict:
        """Validate then command; raises PoseRejectedError on invalid poses."""
        return self._command_pose(self.robot(robot_id), pose, raise_on_invalid=True)

    def estop(self, robot_id: str, engaged: bool) -> dict:
        rt = self.robot(robot_id)
        rt.controller.advance_to(self.clock.now())
        return rt.controller.estop(engaged)

    def enable(self, robot_id: str) -> dict:
        rt = self.robot(robot_id)
        rt.controller.advance_to(self.clock.now())
        return rt.controller.enable()

    def controller_state(self, robot_id: str) -> dict:
        rt = self.robot(robot_id)
        rt.controller.advance_to(self.clock.now())
        state = rt.controller.snapshot().to_dict()
        state["dropped_poses"] = rt.dropped_poses
        state["tracked_target"] = rt.tracked_target
        return state

    # -- dialogue path ------------------------------------------------------

    def compile(self, request: str) -> Timeline:
        action = resolve(request, self.library)
        return schedule(action, self.clips, self.tts, self.cache)

    def say(self, robot_id: str, request: str) -> ExecutionReport:
        """Resolve, schedule and execute a dialogue request (blocking)."""
        timeline = self.compile(request)
        return self.robot(robot_id).executor.run(timeline)

    def say_async(self, robot_id: str, request: str) -> threading.Thread:
        timeline = self.compile(request)
        rt = self.robot(robot_id)
        thread = threading.Thread(target=rt.executor.run, args=(timeline,), daemon=True)
        thread.start()
        return thread

    def play_clip(self, robot_id: str, name: str) -> ExecutionReport:
        if name not in self.clips:
            raise KeyError(f"no clip named {name!r}")
        return self.say(robot_id, f"<anim:{name}>")

    def preempt(self, robot_id: str) -> None:
        self.robot(robot_id).executor.preempt()

    def prefetch(self, entries: dict[str, str] | None = None) -> dict:
        """Pre-synthesize dialogue audio into the cache.

        With no argument the configured library is prefetched; an explicit
        {key: dialogue-text} map (e.g. a library file supplied by the CLI)
        is synthesized instead.
        """
        if entries is not None:
            actions = {k: resolve(text, None) for k, text in entries.items()}
        else:
            actions = self.library.entries
        for action in actions.values():
            synthesize(action, self.tts, self.cache)
        return {"entries": len(actions), "cache_entries": len(self.cache)}

    # -- gaze tracking --------------------------------------------------------
    # One active tracked target per robot.  Starting a track returns a
    # generation token; updates carrying a stale token are dropped, which is
    # how a replaced stream goes quiet without racing the replacement.

    def start_track(self, robot_id: str, target_id: str) -> int:
        rt = self.robot(robot_id)
        with rt._track_lock:
            rt.track_generation += 1
            rt.tracked_target = target_id
            return rt.track_generation

    def update_track(self, robot_id: str, generation: int, point) -> bool:
        rt = self.robot(robot_id)
        with rt._track_lock:
            if generation != rt.track_generation or rt.tracked_target is None:
                return False
            rt.face_send(gaze_message(*point))
            return True

    def stop_track(self, robot_id: str, generation: int | None = None) -> bool:
        """End the active track (LookReset); stale generations are ignored."""
        rt = self.robot(robot_id)
        with rt._track_lock:
            if rt.tracked_target is None:
                return False
            if generation is not None and generation != rt.track_generation:
                return False
            rt.tracked_target = None
            rt.face_send(look_reset_message())
            return True

    # -- offline-capable utilities ---------------------------------------

    def workspace(self, translation_resolution=0.002, tilt_resolution=None, azimuth_count=24) -> WorkspaceReport:
        import math

        return sample_workspace(
            self.geometry,
            translation_resolution=translation_resolution,
            tilt_resolution=tilt_resolution or math.radians(1.0),
            azimuth_count=azimuth_count,
        )

    def lint(self, clip) -> LintReport:
        return lint_clip(clip, self.geometry, rate=self.config.frame_rate)
