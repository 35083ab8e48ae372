"""Speech synthesis clients and the timing payload they return.

Two clients share one interface: StubTts builds deterministic audio and
timings from the bundled lexicon (fixed 80 ms per phoneme, no network),
and HttpTts talks to a real text-to-speech server over a documented HTTP
contract:

    POST <endpoint>  {"text": ..., "voice": ...}
    200 -> {"audio_b64": ..., "duration": seconds,
            "phonemes": [[symbol, start, end], ...],
            "words": [[word, start, end], ...]}

synthesize() is the cache-aware entry point used by the scheduler.
"""

from __future__ import annotations

import base64
import io
import math
import struct
import wave
from dataclasses import dataclass
from typing import Protocol

import httpx

from animatron.dialogue.lexicon import tokenize_words, word_phonemes
from animatron.dialogue.script import DialogueAction

SECONDS_PER_PHONEME = 0.08
_SAMPLE_RATE = 16000


class TtsUnavailableError(RuntimeError):
    """The TTS backend cannot be reached and the cache has no entry."""


@dataclass(frozen=True)
class SpeechTiming:
    """Audio plus aligned phoneme and word intervals."""

    audio: bytes
    duration: float
    phonemes: tuple[tuple[str, float, float], ...]
    words: tuple[tuple[str, float, float], ...]

    def __post_init__(self):
        if self.duration < 0:
            raise ValueError("duration must be >= 0")
        prev_end = 0.0
        for sym, start, end in self.phonemes:
            if start < prev_end - 1e-9 or end < start or end > self.duration + 1e-9:
                raise ValueError(f"phoneme {sym!r} interval [{start}, {end}] out of order")
            prev_end = end
        boundaries = {round(p, 9) for ph in self.phonemes for p in (ph[1], ph[2])}
        for word, start, end in self.words:
            if round(start, 9) not in boundaries or round(end, 9) not in boundaries:
                raise ValueError(f"word {word!r} boundaries not aligned with phonemes")

    def word_start(self, index: int) -> float:
        """Start time of word `index`; past-the-end indexes map to duration."""
        if index < len(self.words):
            return self.words[index][1]
        return self.duration

    def timing_dict(self) -> dict:
        return {
            "duration": self.duration,
            "phonemes": [list(p) for p in self.phonemes],
            "words": [list(w) for w in self.words],
        }

    @classmethod
    def from_timing_dict(cls, audio: bytes, data: dict) -> "SpeechTiming":
        return cls(
            audio=audio,
            duration=float(data["duration"]),
            phonemes=tuple((str(s), float(a), float(b)) for s, a, b in data["phonemes"]),
            words=tuple((str(w), float(a), float(b)) for w, a, b in data["words"]),
        )


EMPTY_TIMING = SpeechTiming(audio=b"", duration=0.0, phonemes=(), words=())


class TtsClient(Protocol):
    voice: str

    def speak(self, text: str) -> SpeechTiming: ...


def _tone_wav(duration: float, freq: float = 220.0, amplitude: float = 0.12) -> bytes:
    """A quiet deterministic sine, so `say` is audible if anything plays it."""
    n = int(round(duration * _SAMPLE_RATE))
    buf = io.BytesIO()
    with wave.open(buf, "wb") as w:
        w.setnchannels(1)
        w.setsampwidth(2)
        w.setframerate(_SAMPLE_RATE)
        scale = amplitude * 32767.0
        frames = bytearray()
        for i in range(n):
            frames += struct.pack("<h", int(scale * math.sin(2.0 * math.pi * freq * i / _SAMPLE_RATE)))
        w.writeframes(bytes(frames))
    return buf.getvalue()


class StubTts:
    """Deterministic offline TTS: lexicon phonemes at a fixed rate."""

    def __init__(self, voice: str = "stub", seconds_per_phoneme: float = SECONDS_PER_PHONEME):
        self.voice = voice
        self.seconds_per_phoneme = seconds_per_phoneme
        self.call_count = 0

    def speak(self, text: str) -> SpeechTiming:
        self.call_count += 1
        phonemes: list[tuple[str, float, float]] = []
        words: list[tuple[str, float, float]] = []
        cursor = 0.0
        for word in tokenize_words(text):
            symbols = word_phonemes(word)
            if not symbols:
                continue
            word_start = cursor
            for sym in symbols:
                phonemes.append((sym, cursor, cursor + self.seconds_per_phoneme))
                cursor += self.seconds_per_phoneme
            words.append((word, word_start, cursor))
        duration = cursor
        audio = _tone_wav(duration) if duration > 0 else b""
        return SpeechTiming(
            audio=audio, duration=duration, phonemes=tuple(phonemes), words=tuple(words)
        )


class HttpTts:
    """Reference client for an HTTP TTS endpoint returning audio + marks."""

    def __init__(self, endpoint: str, voice: str = "default", timeout: float = 10.0, client: httpx.Client | None = None):
        self.endpoint = endpoint
        self.voice = voice
        self._client = client or httpx.Client(timeout=timeout)

    def speak(self, text: str) -> SpeechTiming:
        try:
            resp = self._client.post(self.endpoint, json={"text": text, "voice": self.voice})
            resp.raise_for_status()
            data = resp.json()
        except (httpx.HTTPError, ValueError) as e:
            raise TtsUnavailableError(f"TTS endpoint {self.endpoint}: {e}") from None
        try:
            audio = base64.b64decode(data["audio_b64"])
            return SpeechTiming.from_timing_dict(audio, data)
        except (KeyError, TypeError, ValueError) as e:
            raise TtsUnavailableError(f"TTS endpoint returned malformed payload: {e}") from None


def synthesize(action: DialogueAction, client: TtsClient, cache=None) -> SpeechTiming:
    """Speech audio + timings for an action, via the cache when possible.

    Empty speech text short-circuits to a zero-duration timing without
    touching the client or the cache.
    """
    text = action.speech_text
    if not tokenize_words(text):
        return EMPTY_TIMING
    if cache is not None:
        hit = cache.get(client.voice, text)
        if hit is not None:
            return hit
    timing = client.speak(text)
    if cache is not None:
        cache.put(client.voice, text, timing)
    return timing
