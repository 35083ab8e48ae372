"""FastAPI bridge: REST control surface plus per-robot WebSocket feeds.

Face/preview clients subscribe to ws://host/robot/<id> and receive the
versioned JSON message stream (visemes, action units, gaze, face config,
audio starts, platform poses).  The REST routes drive the engine; blocking
engine calls run in the threadpool (plain def endpoints), so the event
loop stays free for fan-out.
"""

from __future__ import annotations

import asyncio
import contextlib
import json

from fastapi import FastAPI, HTTPException, WebSocket, WebSocketDisconnect
from fastapi.responses import FileResponse

import animatron
from animatron.animation.clip import ClipError
from animatron.animation.parser import clip_to_json, parse_clip
from animatron.config import AppConfig, load_config
from animatron.dialogue.executor import ExecutionReport
from animatron.dialogue.script import DialogueError
from animatron.dialogue.timeline import UnresolvedBehaviorError
from animatron.dialogue.tts import TtsUnavailableError
from animatron.engine import Engine, PoseRejectedError
from animatron.face import (
    FaceCommandError,
    action_units_message,
    face_config_message,
    gaze_message,
    look_reset_message,
    viseme_message,
)
from animatron.kinematics.pose import Pose6
from animatron.server.broker import FaceBroker
from animatron.server import schemas


def _report_json(report) -> dict:
    return {
        "robot": report.robot,
        "preempted": report.preempted,
        "error": report.error,
        "max_deviation": report.max_deviation,
        "records": [
            {
                "scheduled": r.scheduled,
                "actual": r.actual,
                "sink": r.sink,
                "kind": r.kind,
                "detail": r.detail,
            }
            for r in report.records
        ],
    }


def create_app(config: AppConfig | None = None, engine: Engine | None = None) -> FastAPI:
    cfg = config or load_config()
    eng = engine or Engine(cfg)
    broker = FaceBroker()
    eng.set_face_publisher(broker.publish)

    @contextlib.asynccontextmanager
    async def lifespan(app: FastAPI):
        broker.bind_loop(asyncio.get_running_loop())
        yield

    app = FastAPI(title="animatron bridge", version=animatron.__version__, lifespan=lifespan)
    app.state.engine = eng
    app.state.broker = broker

    @app.get("/healthz")
    def healthz():
        return {"ok": True, "version": animatron.__version__}

    @app.get("/robots")
    def robots():
        return {"robots": eng.robots()}

    # -- dialogue ------------------------------------------------------------

    @app.post("/robot/{robot_id}/say", response_model=schemas.ReportResponse)
    def say(robot_id: str, body: schemas.SayRequest):
        try:
            if body.wait:
                return _report_json(eng.say(robot_id, body.request))
            eng.say_async(robot_id, body.request)
            return _report_json(ExecutionReport(robot=robot_id))
        except (DialogueError, UnresolvedBehaviorError, KeyError, ValueError) as e:
            raise HTTPException(status_code=422, detail=str(e)) from None
        except TtsUnavailableError as e:
            raise HTTPException(status_code=503, detail=str(e)) from None

    @app.post("/robot/{robot_id}/anim", response_model=schemas.ReportResponse)
    def play_anim(robot_id: str, body: schemas.AnimRequest):
        try:
            return _report_json(eng.play_clip(robot_id, body.name))
        except KeyError as e:
            raise HTTPException(status_code=404, detail=str(e)) from None

    @app.post("/robot/{robot_id}/preempt", response_model=schemas.OkResponse)
    def preempt(robot_id: str):
        eng.preempt(robot_id)
        return {"ok": True}

    @app.post("/prefetch", response_model=schemas.PrefetchResponse)
    def prefetch(body: schemas.PrefetchRequest | None = None):
        try:
            return eng.prefetch(body.entries if body else None)
        except DialogueError as e:
            raise HTTPException(status_code=422, detail=str(e)) from None
        except TtsUnavailableError as e:
            raise HTTPException(status_code=503, detail=str(e)) from None

    # -- body ------------------------------------------------------------------

    @app.post("/robot/{robot_id}/pose", response_model=schemas.PoseResponse)
    def set_pose(robot_id: str, body: schemas.PoseRequest):
        pose = Pose6(body.x, body.y, body.z, body.roll, body.pitch, body.yaw)
        try:
            result = eng.set_pose(robot_id, pose)
        except PoseRejectedError as e:
            raise HTTPException(status_code=422, detail=e.reason) from None
        return {"sent": True, "angles": result["angles"], "ticks": result["ticks"]}

    @app.post("/robot/{robot_id}/estop", response_model=schemas.OkResponse)
    def estop(robot_id: str, body: schemas.EstopRequest):
        eng.estop(robot_id, body.engaged)
        return {"ok": True}

    @app.post("/robot/{robot_id}/enable", response_model=schemas.OkResponse)
    def enable(robot_id: str):
        eng.enable(robot_id)
        return {"ok": True}

    @app.get("/robot/{robot_id}/state")
    def state(robot_id: str):
        return eng.controller_state(robot_id)

    # -- face / gaze -----------------------------------------------------------

    @app.post("/robot/{robot_id}/face", response_model=schemas.OkResponse)
    def face_command(robot_id: str, body: schemas.FaceCommandRequest):
        try:
            if body.type == "viseme":
                msg = viseme_message(body.symbol or "")
            elif body.type == "action_units":
                msg = action_units_message(
                    [(u["au"], u.get("side", "both"), u["intensity"]) for u in body.units or []]
                )
            elif body.type == "gaze":
                if not body.point or len(body.point) != 3:
                    raise FaceCommandError("gaze needs point [x, y, z]")
                msg = gaze_message(*body.point)
            elif body.type == "look_reset":
                msg = look_reset_message()
            elif body.type == "face_config":
                msg = face_config_message(body.config or {})
            else:
                raise FaceCommandError(f"unknown face command type {body.type!r}")
        except (FaceCommandError, KeyError) as e:
            raise HTTPException(status_code=422, detail=str(e)) from None
        eng.robot(robot_id).face_send(msg)
        return {"ok": True}

    @app.post("/robot/{robot_id}/gaze/track", response_model=schemas.TrackStartResponse)
    def gaze_track(robot_id: str, body: schemas.TrackStartRequest):
        return {"track": eng.start_track(robot_id, body.target_id)}

    @app.post("/robot/{robot_id}/gaze/update")
    def gaze_update(robot_id: str, body: schemas.TrackUpdateRequest):
        forwarded = eng.update_track(robot_id, body.track, tuple(body.point))
        return {"forwarded": forwarded}

    @app.post("/robot/{robot_id}/gaze/stop")
    def gaze_stop(robot_id: str, body: schemas.TrackStopRequest):
        return {"stopped": eng.stop_track(robot_id, body.track)}

    # -- clips / workspace / audio ---------------------------------------

    @app.get("/clips")
    def clips():
        return {"clips": eng.clips.names()}

    @app.get("/clips/{name}")
    def clip(name: str):
        try:
            return json.loads(clip_to_json(eng.clips.get(name)))
        except KeyError as e:
            raise HTTPException(status_code=404, detail=str(e)) from None

    @app.post("/clips/lint", response_model=schemas.LintResponse)
    def lint(body: schemas.LintRequest):
        try:
            clip_obj = parse_clip(body.clip)
        except ClipError as e:
            raise HTTPException(status_code=422, detail=str(e)) from None
        report = eng.lint(clip_obj)
        return {
            "clip": report.clip,
            "ok": report.ok,
            "frame_count": report.frame_count,
            "invalid_frames": [{"time": t, "reason": r} for t, r in report.invalid_frames],
        }

    @app.get("/workspace")
    def workspace(translation_resolution: float = 0.004, tilt_resolution_deg: float = 2.0):
        import math

        report = eng.workspace(
            translation_resolution=translation_resolution,
            tilt_resolution=math.radians(tilt_resolution_deg),
        )
        return json.loads(report.to_json())

    @app.get("/audio/{key}")
    def audio(key: str):
        path = eng.cache.audio_path(key)
        if not path.exists():
            raise HTTPException(status_code=404, detail="no cached audio for key")
        return FileResponse(path, media_type="audio/wav")

    # -- WebSocket feed ----------------------------------------------------

    if cfg.face_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/face", StaticFiles(directory=cfg.face_dir, html=True), name="face")

    @app.websocket("/robot/{robot_id}")
    async def subscribe(ws: WebSocket, robot_id: str):
        await ws.accept()
        client = broker.subscribe(robot_id)
        try:
            while not client.dead:
                try:
                    message = await asyncio.wait_for(client.queue.get(), timeout=0.5)
                except asyncio.TimeoutError:
                    continue
                await ws.send_text(message)
        except (WebSocketDisconnect, RuntimeError):
            pass
        finally:
            broker.unsubscribe(robot_id, client)
            with contextlib.suppress(Exception):
                await ws.close()

    return app
