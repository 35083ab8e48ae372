"""Runtime configuration: one JSON file, env overrides, bundled defaults.

Precedence (lowest to highest): bundled defaults, config file, environment
variables, explicit CLI flags.  Env vars: ANIMATRON_CONFIG (config file
path), ANIMATRON_SERVER (CLI server URL), ANIMATRON_CACHE_DIR.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8765


def bundled_data_dir() -> Path:
    return Path(os.fspath(resources.files("animatron").joinpath("data")))


@dataclass(frozen=True)
class TtsConfig:
    mode: str = "stub"  # "stub" or "http"
    endpoint: str | None = None
    voice: str = "default"

    def __post_init__(self):
        if self.mode not in ("stub", "http"):
            raise ValueError(f"tts mode must be 'stub' or 'http', got {self.mode!r}")
        if self.mode == "http" and not self.endpoint:
            raise ValueError("tts mode 'http' requires an endpoint URL")


@dataclass(frozen=True)
class AppConfig:
    geometry_path: Path | None = None  # None -> bundled tabletop-v1
    clips_dir: Path | None = None  # None -> bundled clip set
    library_path: Path | None = None  # None -> bundled demo library
    cache_dir: Path = field(default_factory=lambda: Path.home() / ".cache" / "animatron")
    tts: TtsConfig = field(default_factory=TtsConfig)
    host: str = DEFAULT_HOST
    port: int = DEFAULT_PORT
    frame_rate: float = 50.0
    face_dir: Path | None = None  # built face client to serve at /face

    def resolved_geometry_path(self) -> Path:
        return self.geometry_path or bundled_data_dir() / "geometry" / "tabletop_v1.json"

    def resolved_clips_dir(self) -> Path:
        return self.clips_dir or bundled_data_dir() / "clips"

    def resolved_library_path(self) -> Path:
        return self.library_path or bundled_data_dir() / "dialogue" / "demo_library.json"


def load_config(path: str | Path | None = None, **overrides) -> AppConfig:
    """Build an AppConfig from a JSON file plus keyword overrides."""
    if path is None:
        env_path = os.environ.get("ANIMATRON_CONFIG")
        path = Path(env_path) if env_path else None
    data: dict = {}
    if path is not None:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    cfg = AppConfig(
        geometry_path=Path(data["geometry_path"]) if data.get("geometry_path") else None,
        clips_dir=Path(data["clips_dir"]) if data.get("clips_dir") else None,
        library_path=Path(data["library_path"]) if data.get("library_path") else None,
        cache_dir=Path(data.get("cache_dir") or Path.home() / ".cache" / "animatron"),
        tts=TtsConfig(**data.get("tts", {})),
        host=data.get("host", DEFAULT_HOST),
        port=int(data.get("port", DEFAULT_PORT)),
        frame_rate=float(data.get("frame_rate", 50.0)),
        face_dir=Path(data["face_dir"]) if data.get("face_dir") else None,
    )
    env_cache = os.environ.get("ANIMATRON_CACHE_DIR")
    if env_cache:
        cfg = replace(cfg, cache_dir=Path(env_cache))
    clean = {k: v for k, v in overrides.items() if v is not None}
    if clean:
        cfg = replace(cfg, **clean)
    return cfg
