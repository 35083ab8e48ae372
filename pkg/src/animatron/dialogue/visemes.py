"""Phoneme-to-viseme mapping.

The mapping is total over every phoneme the stub lexicon can emit (all
ARPABET symbols plus the letter-fallback outputs); an exhaustiveness test
keeps it that way.  Consecutive duplicates merge and every utterance ends
with a closing "sil" at the audio end.
"""

from __future__ import annotations

from dataclasses import dataclass

from animatron.dialogue.tts import SpeechTiming
from animatron.face import VISEMES

PHONEME_TO_VISEME: dict[str, str] = {
    "AA": "aa", "AE": "aa", "AH": "aa", "AO": "oh", "AW": "aa", "AY": "aa",
    "EH": "E", "ER": "E", "EY": "E",
    "IH": "ih", "IY": "ih", "Y": "ih",
    "OW": "oh", "OY": "oh",
    "UH": "ou", "UW": "ou", "W": "ou",
    "B": "PP", "M": "PP", "P": "PP",
    "CH": "CH", "JH": "CH", "SH": "CH", "ZH": "CH",
    "D": "DD", "T": "DD",
    "DH": "TH", "TH": "TH",
    "F": "FF", "V": "FF",
    "G": "kk", "K": "kk", "NG": "kk",
    "HH": "aa",
    "L": "nn", "N": "nn",
    "R": "RR",
    "S": "SS", "Z": "SS",
}

assert set(PHONEME_TO_VISEME.values()) <= set(VISEMES)


class UnknownPhonemeError(KeyError):
    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"no viseme mapping for phoneme {symbol!r}")


@dataclass(frozen=True)
class VisemeEvent:
    time: float
    viseme: str


def phonemes_to_visemes(timing: SpeechTiming) -> list[VisemeEvent]:
    """Viseme events for a speech timing, ending in "sil" at audio end."""
    events: list[VisemeEvent] = []
    for symbol, start, _end in timing.phonemes:
        try:
            viseme = PHONEME_TO_VISEME[symbol]
        except KeyError:
            raise UnknownPhonemeError(symbol) from None
        if events and events[-1].viseme == viseme:
            continue  # merge consecutive duplicates
        events.append(VisemeEvent(time=start, viseme=viseme))
    events.append(VisemeEvent(time=timing.duration, viseme="sil"))
    return events
