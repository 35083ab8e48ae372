"""Saved dialogue actions: a JSON map from index key to dialogue text."""

from __future__ import annotations

import json
from pathlib import Path

from animatron.dialogue.script import DialogueAction, DialogueError, parse_dialogue


class DialogueLibrary:
    def __init__(self, entries: dict[str, DialogueAction] | None = None):
        self.entries: dict[str, DialogueAction] = dict(entries or {})

    @classmethod
    def load(cls, path: str | Path) -> "DialogueLibrary":
        def no_duplicates(pairs):
            seen = {}
            for key, value in pairs:
                if key in seen:
                    raise DialogueError(f"{path}: duplicate library key {key!r}")
                seen[key] = value
            return seen

        raw = json.loads(Path(path).read_text(encoding="utf-8"), object_pairs_hook=no_duplicates)
        if not isinstance(raw, dict):
            raise DialogueError(f"{path}: dialogue library must be a JSON object")
        entries = {}
        for key, text in raw.items():
            if not isinstance(text, str):
                raise DialogueError(f"{path}: entry {key!r} must be a string")
            try:
                entries[key] = parse_dialogue(text)
            except DialogueError as e:
                raise DialogueError(f"{path}: entry {key!r}: {e}") from None
        return cls(entries)

    def keys(self) -> list[str]:
        return sorted(self.entries)

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)


def resolve(request: str, library: DialogueLibrary | None = None) -> DialogueAction:
    """A library key returns the stored action; anything else parses inline."""
    if library is not None and request in library:
        return library.entries[request]
    return parse_dialogue(request)
