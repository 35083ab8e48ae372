import pytest

from animatron.animation.library import ClipLibrary
from animatron.config import bundled_data_dir
from animatron.dialogue.cache import SpeechCache, cache_key
from animatron.dialogue.library import DialogueLibrary, resolve
from animatron.dialogue.script import parse_dialogue
from animatron.dialogue.timeline import UnresolvedBehaviorError, schedule
from animatron.dialogue.tts import StubTts


@pytest.fixture(scope="module")
def clips():
    return ClipLibrary.load_dir(bundled_data_dir() / "clips")


def test_text_only_timeline(clips):
    tl = schedule(parse_dialogue("Hello world!"), clips, StubTts())
    assert tl.behaviors == ()
    assert tl.total_duration == pytest.approx(0.64)  # 8 stub phonemes at 80 ms
    assert tl.visemes[-1].viseme == "sil"
    assert tl.visemes[-1].time == pytest.approx(tl.speech.duration)


def test_tag_anchored_to_following_word(clips):
    # "hi" is two stub phonemes, so "there" starts at 0.16 s
    tl = schedule(parse_dialogue("Hi <anim:happy_dance> there"), clips, StubTts())
    (anim,) = tl.behaviors
    assert anim.name == "happy_dance"
    assert anim.time == pytest.approx(0.16)
    assert anim.duration == pytest.approx(1.6)
    assert tl.total_duration == pytest.approx(0.16 + 1.6)


def test_trailing_tag_anchors_to_audio_end(clips):
    tl = schedule(parse_dialogue("Hello world <anim:nod>"), clips, StubTts())
    (anim,) = tl.behaviors
    assert anim.time == pytest.approx(tl.speech.duration)


def test_tag_only_action(clips):
    tl = schedule(parse_dialogue("<anim:nod>"), clips, StubTts())
    assert tl.speech.duration == 0.0
    (anim,) = tl.behaviors
    assert anim.time == 0.0
    assert tl.total_duration == pytest.approx(1.2)  # the nod clip's length


def test_unresolved_animation(clips):
    with pytest.raises(UnresolvedBehaviorError, match="animation"):
        schedule(parse_dialogue("x <anim:moonwalk> y"), clips, StubTts())


def test_unresolved_expression(clips):
    with pytest.raises(UnresolvedBehaviorError, match="expression"):
        schedule(parse_dialogue("x <expr:smug> y"), clips, StubTts())


def test_gaze_point_arity_checked(clips):
    with pytest.raises(UnresolvedBehaviorError, match="x, y, z"):
        schedule(parse_dialogue("<gaze:point(1,2)>"), clips, StubTts())


def test_anchor_monotone_as_tag_moves_later(clips):
    words = "good morning friend look at me".split()
    times = []
    for pos in range(len(words) + 1):
        text = " ".join(words[:pos] + ["<anim:nod>"] + words[pos:])
        tl = schedule(parse_dialogue(text), clips, StubTts())
        times.append(tl.behaviors[0].time)
    assert times == sorted(times)


def test_audio_key_present_with_cache(tmp_path, clips):
    stub = StubTts()
    tl = schedule(parse_dialogue("hello"), clips, stub, cache=SpeechCache(tmp_path))
    assert tl.audio_key == cache_key(stub.voice, "hello")
    tl2 = schedule(parse_dialogue("<anim:nod>"), clips, stub, cache=SpeechCache(tmp_path))
    assert tl2.audio_key is None


def test_resolve_library_vs_inline(tmp_path):
    path = tmp_path / "lib.json"
    path.write_text('{"greet": "Hello there"}')
    lib = DialogueLibrary.load(path)
    stored = resolve("greet", lib)
    assert stored is lib.entries["greet"]
    inline = resolve("Hello!", lib)
    assert inline.speech_text == "Hello!"


def test_library_duplicate_keys_rejected(tmp_path):
    path = tmp_path / "lib.json"
    path.write_text('{"a": "x", "a": "y"}')
    with pytest.raises(Exception, match="duplicate library key"):
        DialogueLibrary.load(path)


def test_library_bad_entry_named(tmp_path):
    path = tmp_path / "lib.json"
    path.write_text('{"a": "unterminated <anim:"}')
    with pytest.raises(Exception, match="entry 'a'"):
        DialogueLibrary.load(path)


def test_bundled_demo_library_loads():
    lib = DialogueLibrary.load(bundled_data_dir() / "dialogue" / "demo_library.json")
    assert len(lib) == 3
    assert "greeting_1" in lib
