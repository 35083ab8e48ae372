"""Pydantic request/response models for the bridge API."""

from __future__ import annotations

from pydantic import BaseModel, Field


class SayRequest(BaseModel):
    request: str = Field(min_length=1, description="dialogue text or library key")
    wait: bool = True


class PoseRequest(BaseModel):
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0
    roll: float = 0.0
    pitch: float = 0.0
    yaw: float = 0.0


class AnimRequest(BaseModel):
    name: str = Field(min_length=1)


class EstopRequest(BaseModel):
    engaged: bool


class FaceCommandRequest(BaseModel):
    type: str
    symbol: str | None = None
    units: list[dict] | None = None
    point: list[float] | None = None
    config: dict | None = None


class TrackStartRequest(BaseModel):
    target_id: str = Field(min_length=1)


class TrackUpdateRequest(BaseModel):
    track: int
    point: list[float] = Field(min_length=3, max_length=3)


class TrackStopRequest(BaseModel):
    track: int | None = None


class LintRequest(BaseModel):
    clip: str  # raw clip JSON document


class PrefetchRequest(BaseModel):
    entries: dict[str, str] | None = None


class DispatchRecordOut(BaseModel):
    scheduled: float
    actual: float
    sink: str
    kind: str
    detail: str


class ReportResponse(BaseModel):
    robot: str
    preempted: bool
    error: str | None
    max_deviation: float
    records: list[DispatchRecordOut]


class PoseResponse(BaseModel):
    sent: bool
    angles: list[float]
    ticks: list[int]


class LintIssue(BaseModel):
    time: float
    reason: str


class LintResponse(BaseModel):
    clip: str
    ok: bool
    frame_count: int
    invalid_frames: list[LintIssue]


class PrefetchResponse(BaseModel):
    entries: int
    cache_entries: int


class TrackStartResponse(BaseModel):
    track: int


class OkResponse(BaseModel):
    ok: bool = True
