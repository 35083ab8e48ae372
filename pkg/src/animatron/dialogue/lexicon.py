"""Grapheme-to-phoneme lexicon for the deterministic stub TTS.

Covers the bundled demo vocabulary with ARPABET-style phonemes; unknown
words fall back to one phoneme per letter.  The stub's whole point is
reproducible timing with no network, not linguistic accuracy.
"""

from __future__ import annotations

import re

_WORD_RE = re.compile(r"[a-zA-Z']+")

LEXICON: dict[str, tuple[str, ...]] = {
    "a": ("AH",),
    "am": ("AE", "M"),
    "and": ("AE", "N", "D"),
    "at": ("AE", "T"),
    "bye": ("B", "AY"),
    "dance": ("D", "AE", "N", "S"),
    "day": ("D", "EY"),
    "friend": ("F", "R", "EH", "N", "D"),
    "go": ("G", "OW"),
    "good": ("G", "UH", "D"),
    "great": ("G", "R", "EY", "T"),
    "hello": ("HH", "EH", "L", "OW"),
    "here": ("HH", "IH", "R"),
    "hi": ("HH", "AY"),
    "how": ("HH", "AW"),
    "i": ("AY",),
    "is": ("IH", "Z"),
    "let's": ("L", "EH", "T", "S"),
    "look": ("L", "UH", "K"),
    "me": ("M", "IY"),
    "meet": ("M", "IY", "T"),
    "morning": ("M", "AO", "R", "N", "IH", "NG"),
    "my": ("M", "AY"),
    "name": ("N", "EY", "M"),
    "nice": ("N", "AY", "S"),
    "no": ("N", "OW"),
    "okay": ("OW", "K", "EY"),
    "robot": ("R", "OW", "B", "AA", "T"),
    "see": ("S", "IY"),
    "soon": ("S", "UW", "N"),
    "thanks": ("TH", "AE", "NG", "K", "S"),
    "there": ("DH", "EH", "R"),
    "this": ("DH", "IH", "S"),
    "to": ("T", "UW"),
    "watch": ("W", "AA", "CH"),
    "wave": ("W", "EY", "V"),
    "world": ("W", "ER", "L", "D"),
    "yes": ("Y", "EH", "S"),
    "you": ("Y", "UW"),
    "your": ("Y", "AO", "R"),
}

# one phoneme per letter for out-of-lexicon words
LETTER_PHONEMES: dict[str, str] = {
    "a": "AE", "b": "B", "c": "K", "d": "D", "e": "EH", "f": "F", "g": "G",
    "h": "HH", "i": "IH", "j": "JH", "k": "K", "l": "L", "m": "M", "n": "N",
    "o": "OW", "p": "P", "q": "K", "r": "R", "s": "S", "t": "T", "u": "UH",
    "v": "V", "w": "W", "x": "S", "y": "Y", "z": "Z",
}


def tokenize_words(text: str) -> list[str]:
    """Lowercased word tokens; punctuation is not spoken."""
    return [m.group(0).lower() for m in _WORD_RE.finditer(text)]


def word_phonemes(word: str) -> tuple[str, ...]:
    word = word.lower()
    if word in LEXICON:
        return LEXICON[word]
    return tuple(LETTER_PHONEMES[ch] for ch in word if ch in LETTER_PHONEMES)
