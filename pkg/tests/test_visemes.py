import pytest

from animatron.dialogue.lexicon import LETTER_PHONEMES, LEXICON
from animatron.dialogue.tts import EMPTY_TIMING, SpeechTiming, StubTts
from animatron.dialogue.visemes import (
    PHONEME_TO_VISEME,
    UnknownPhonemeError,
    VisemeEvent,
    phonemes_to_visemes,
)
from animatron.face import VISEMES


def test_empty_timing_gives_single_sil():
    assert phonemes_to_visemes(EMPTY_TIMING) == [VisemeEvent(0.0, "sil")]


def test_stub_hello_viseme_times():
    # HH EH L OW -> aa E nn oh at the phoneme starts, then closing sil
    events = phonemes_to_visemes(StubTts().speak("hello"))
    assert [e.viseme for e in events] == ["aa", "E", "nn", "oh", "sil"]
    assert [e.time for e in events] == [
        0.0,
        pytest.approx(0.08),
        pytest.approx(0.16),
        pytest.approx(0.24),
        pytest.approx(0.32),
    ]


def test_consecutive_duplicates_merge():
    timing = SpeechTiming(
        audio=b"",
        duration=0.3,
        phonemes=(("B", 0.0, 0.1), ("P", 0.1, 0.2), ("S", 0.2, 0.3)),
        words=(("bps", 0.0, 0.3),),
    )
    events = phonemes_to_visemes(timing)
    assert [e.viseme for e in events] == ["PP", "SS", "sil"]  # B and P both map to PP


def test_mapping_total_over_stub_outputs():
    emitted = {p for phonemes in LEXICON.values() for p in phonemes}
    emitted |= set(LETTER_PHONEMES.values())
    missing = emitted - set(PHONEME_TO_VISEME)
    assert not missing, f"unmapped phonemes: {sorted(missing)}"


def test_mapping_targets_are_valid_visemes():
    assert set(PHONEME_TO_VISEME.values()) <= set(VISEMES)


def test_unknown_phoneme_raises():
    timing = SpeechTiming(
        audio=b"", duration=0.1, phonemes=(("XX", 0.0, 0.1),), words=(("x", 0.0, 0.1),)
    )
    with pytest.raises(UnknownPhonemeError):
        phonemes_to_visemes(timing)


def test_events_span_audio_and_end_in_sil():
    for text in ("hello world", "good morning", "nice to meet you"):
        timing = StubTts().speak(text)
        events = phonemes_to_visemes(timing)
        assert events[0].time == 0.0
        assert events[-1] == VisemeEvent(timing.duration, "sil")
        times = [e.time for e in events]
        assert times == sorted(times)
