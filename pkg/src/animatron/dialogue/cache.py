"""Content-addressed speech cache for offline deployment.

Each (voice, text) pair hashes to one key holding an audio file and a
timing JSON next to it.  Entries are written atomically enough for a
single host (temp file + rename is overkill here; the executor is the
only writer per robot process).
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from animatron.dialogue.tts import SpeechTiming


class CacheCorruptError(RuntimeError):
    def __init__(self, key: str, detail: str):
        self.key = key
        super().__init__(f"cache entry {key} is corrupt: {detail}")


def cache_key(voice: str, text: str) -> str:
    return hashlib.sha256(f"{voice}\n{text}".encode("utf-8")).hexdigest()


class SpeechCache:
    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def _paths(self, key: str) -> tuple[Path, Path]:
        return self.root / f"{key}.wav", self.root / f"{key}.json"

    def get(self, voice: str, text: str) -> SpeechTiming | None:
        key = cache_key(voice, text)
        wav_path, json_path = self._paths(key)
        if not json_path.exists():
            return None
        try:
            data = json.loads(json_path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise CacheCorruptError(key, f"timing JSON unreadable: {e}") from None
        if not wav_path.exists():
            raise CacheCorruptError(key, "timing present but audio file missing")
        try:
            return SpeechTiming.from_timing_dict(wav_path.read_bytes(), data)
        except (KeyError, TypeError, ValueError) as e:
            raise CacheCorruptError(key, f"timing JSON malformed: {e}") from None

    def put(self, voice: str, text: str, timing: SpeechTiming) -> str:
        key = cache_key(voice, text)
        wav_path, json_path = self._paths(key)
        wav_path.write_bytes(timing.audio)
        json_path.write_text(json.dumps(timing.timing_dict()), encoding="utf-8")
        return key

    def audio_path(self, key: str) -> Path:
        return self.root / f"{key}.wav"

    def __len__(self) -> int:
        return sum(1 for _ in self.root.glob("*.json"))
