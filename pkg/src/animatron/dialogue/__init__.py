from animatron.dialogue.script import (
    BehaviorTag,
    DialogueAction,
    DialogueError,
    MalformedTagError,
    SpeechText,
    UnknownTagKindError,
    parse_dialogue,
)
from animatron.dialogue.library import DialogueLibrary, resolve
from animatron.dialogue.tts import (
    HttpTts,
    SpeechTiming,
    StubTts,
    TtsUnavailableError,
    synthesize,
)
from animatron.dialogue.cache import CacheCorruptError, SpeechCache
from animatron.dialogue.visemes import (
    PHONEME_TO_VISEME,
    UnknownPhonemeError,
    VisemeEvent,
    phonemes_to_visemes,
)
from animatron.dialogue.timeline import (
    BehaviorEvent,
    Timeline,
    UnresolvedBehaviorError,
    schedule,
)
from animatron.dialogue.executor import (
    DispatchRecord,
    ExecutionReport,
    Executor,
    RobotSinks,
    SinkDisconnectedError,
)

__all__ = [
    "BehaviorTag",
    "DialogueAction",
    "DialogueError",
    "MalformedTagError",
    "SpeechText",
    "UnknownTagKindError",
    "parse_dialogue",
    "DialogueLibrary",
    "resolve",
    "HttpTts",
    "SpeechTiming",
    "StubTts",
    "TtsUnavailableError",
    "synthesize",
    "CacheCorruptError",
    "SpeechCache",
    "PHONEME_TO_VISEME",
    "UnknownPhonemeError",
    "VisemeEvent",
    "phonemes_to_visemes",
    "BehaviorEvent",
    "Timeline",
    "UnresolvedBehaviorError",
    "schedule",
    "DispatchRecord",
    "ExecutionReport",
    "Executor",
    "RobotSinks",
    "SinkDisconnectedError",
]
