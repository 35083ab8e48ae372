"""Tagged dialogue scripts.

A dialogue action is plain speech text with inline behavior tags of the
form <kind:name> or <kind:name(arg,arg)>.  Kinds: anim (animation clip),
expr (named expression) and gaze (point(x,y,z) or reset).  A tag anchors
to the word that follows it; tags after the last word anchor to the end
of the audio.

    "Hi <anim:happy_dance> there"  ->  happy_dance starts with "there"
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from animatron.dialogue.lexicon import tokenize_words

TAG_KINDS = {"anim": "animation", "expr": "expression", "gaze": "gaze"}

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.-]*")


class DialogueError(ValueError):
    """Base class for dialogue script errors."""


class MalformedTagError(DialogueError):
    def __init__(self, offset: int, detail: str):
        self.offset = offset
        super().__init__(f"malformed tag at offset {offset}: {detail}")


class UnknownTagKindError(DialogueError):
    def __init__(self, kind: str, offset: int):
        self.kind = kind
        super().__init__(f"unknown tag kind {kind!r} at offset {offset} (known: anim, expr, gaze)")


@dataclass(frozen=True)
class SpeechText:
    text: str


@dataclass(frozen=True)
class BehaviorTag:
    kind: str  # "animation" | "expression" | "gaze"
    name: str
    args: tuple[float, ...] = ()


@dataclass(frozen=True)
class DialogueAction:
    segments: tuple

    def __post_init__(self):
        if not self.segments:
            raise DialogueError("dialogue action needs at least one segment")
        object.__setattr__(self, "segments", tuple(self.segments))

    @property
    def speech_text(self) -> str:
        return "".join(s.text for s in self.segments if isinstance(s, SpeechText))

    @property
    def tags(self) -> list[BehaviorTag]:
        return [s for s in self.segments if isinstance(s, BehaviorTag)]

    def tag_word_anchors(self) -> list[tuple[BehaviorTag, int]]:
        """Each tag with the index of the word it precedes.

        The index equals the count of words in the speech text before the
        tag; an index past the last word means "anchor to audio end".
        """
        anchors = []
        words_so_far = 0
        for seg in self.segments:
            if isinstance(seg, SpeechText):
                words_so_far += len(tokenize_words(seg.text))
            else:
                anchors.append((seg, words_so_far))
        return anchors


def _parse_args(raw: str, offset: int) -> tuple[float, ...]:
    raw = raw.strip()
    if not raw:
        return ()
    out = []
    for piece in raw.split(","):
        try:
            out.append(float(piece))
        except ValueError:
            raise MalformedTagError(offset, f"argument {piece.strip()!r} is not a number") from None
    return tuple(out)


def parse_dialogue(text: str) -> DialogueAction:
    """Split text into speech segments and behavior tags."""
    segments: list = []
    pos = 0
    while pos < len(text):
        lt = text.find("<", pos)
        if lt == -1:
            segments.append(SpeechText(text[pos:]))
            break
        if lt > pos:
            segments.append(SpeechText(text[pos:lt]))
        gt = text.find(">", lt)
        if gt == -1:
            raise MalformedTagError(lt, "unterminated tag")
        body = text[lt + 1 : gt]
        if ":" not in body:
            raise MalformedTagError(lt, "expected <kind:name>")
        kind_raw, rest = body.split(":", 1)
        kind_raw = kind_raw.strip()
        if kind_raw not in TAG_KINDS:
            raise UnknownTagKindError(kind_raw, lt)
        rest = rest.strip()
        args: tuple[float, ...] = ()
        if "(" in rest:
            if not rest.endswith(")"):
                raise MalformedTagError(lt, "unterminated argument list")
            name, arg_raw = rest[:-1].split("(", 1)
            args = _parse_args(arg_raw, lt)
        else:
            name = rest
        name = name.strip()
        if not _NAME_RE.fullmatch(name):
            raise MalformedTagError(lt, f"invalid behavior name {name!r}")
        segments.append(BehaviorTag(kind=TAG_KINDS[kind_raw], name=name, args=args))
        pos = gt + 1
    return DialogueAction(tuple(segments))
