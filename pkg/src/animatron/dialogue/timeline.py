"""Compile a dialogue action into one synchronized event timeline.

The timeline is pure data: an audio start, time-sorted viseme events and
time-sorted behavior events, everything anchored to the speech timing.
Behavior tags fire at the start of the word they precede; tags after the
last word fire at audio end.  Total duration covers the audio and the
longest-running triggered animation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from animatron.animation.library import ClipLibrary
from animatron.dialogue.cache import SpeechCache, cache_key
from animatron.dialogue.script import DialogueAction
from animatron.dialogue.tts import SpeechTiming, TtsClient, synthesize
from animatron.dialogue.visemes import VisemeEvent, phonemes_to_visemes
from animatron.face import EXPRESSIONS


class UnresolvedBehaviorError(ValueError):
    def __init__(self, kind: str, name: str, detail: str = ""):
        self.kind, self.name = kind, name
        super().__init__(f"cannot resolve {kind} behavior {name!r}" + (f": {detail}" if detail else ""))


@dataclass(frozen=True)
class BehaviorEvent:
    time: float
    kind: str  # "animation" | "expression" | "gaze"
    name: str
    args: tuple[float, ...] = ()
    duration: float = 0.0  # runtime of the triggered clip, 0 for instant events


@dataclass(frozen=True)
class Timeline:
    speech: SpeechTiming
    visemes: tuple[VisemeEvent, ...]
    behaviors: tuple[BehaviorEvent, ...]
    total_duration: float
    audio_key: str | None = None

    def __post_init__(self):
        for ev in self.visemes:
            if not (0.0 <= ev.time <= self.total_duration + 1e-9):
                raise ValueError(f"viseme event at {ev.time} outside [0, {self.total_duration}]")
        for ev in self.behaviors:
            if not (0.0 <= ev.time <= self.total_duration + 1e-9):
                raise ValueError(f"behavior event at {ev.time} outside [0, {self.total_duration}]")


def schedule(
    action: DialogueAction,
    clips: ClipLibrary,
    tts: TtsClient,
    cache: SpeechCache | None = None,
    expressions: dict = EXPRESSIONS,
) -> Timeline:
    """Synthesize speech and lay out every event on one clock.

    Raises UnresolvedBehaviorError before any audio is considered if a tag
    cannot be resolved against the clip/expression registries.
    """
    behaviors: list[BehaviorEvent] = []
    anchors = action.tag_word_anchors()
    for tag, _ in anchors:
        if tag.kind == "animation":
            if tag.name not in clips:
                raise UnresolvedBehaviorError("animation", tag.name, "not in clip library")
        elif tag.kind == "expression":
            if tag.name not in expressions:
                raise UnresolvedBehaviorError(
                    "expression", tag.name, f"known: {', '.join(sorted(expressions))}"
                )
        elif tag.kind == "gaze":
            if tag.name == "point":
                if len(tag.args) != 3:
                    raise UnresolvedBehaviorError("gaze", tag.name, "point needs (x, y, z)")
            elif tag.name != "reset":
                raise UnresolvedBehaviorError("gaze", tag.name, "known: point(x,y,z), reset")
        else:  # pragma: no cover - parser only emits the three kinds
            raise UnresolvedBehaviorError(tag.kind, tag.name)

    timing = synthesize(action, tts, cache)
    audio_key = None
    if cache is not None and timing.duration > 0:
        audio_key = cache_key(tts.voice, action.speech_text)

    visemes = tuple(phonemes_to_visemes(timing))
    total = timing.duration
    for tag, word_index in anchors:
        start = timing.word_start(word_index)
        duration = clips.get(tag.name).duration if tag.kind == "animation" else 0.0
        behaviors.append(
            BehaviorEvent(time=start, kind=tag.kind, name=tag.name, args=tag.args, duration=duration)
        )
        total = max(total, start + duration)
    behaviors.sort(key=lambda b: b.time)
    return Timeline(
        speech=timing,
        visemes=visemes,
        behaviors=tuple(behaviors),
        total_duration=total,
        audio_key=audio_key,
    )
