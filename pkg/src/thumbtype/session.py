"""Phrase-set ingestion and the interactive transcription-session state machine.

A session walks Preparation -> PhraseShown -> Transcribing -> Submitted and
back to PhraseShown for the next trial. Key taps arrive already registered
to a key label (the caller resolves touch points to keys); the session
maintains the committed text, the per-character tap context that drives
word suggestions, and the trial log.
"""

from __future__ import annotations

import enum
import os
import random
from dataclasses import dataclass
from typing import Sequence

from . import decoder
from .decoder import BeamConfig, DEFAULT_BEAM, SpatialModel, SuggestionPair
from .geometry import (
    BACKSPACE,
    KeyboardLayout,
    LETTERS,
    SPACE,
    SUBMIT,
    SUGGESTION_LABELS,
    TouchPoint,
    key_center,
)
from .lexicon import Lexicon
from .metrics import InputEvent, TrialLog


class SessionError(RuntimeError):
    """An action that is illegal in the session's current phase."""


class PhraseSetError(ValueError):
    pass


@dataclass(frozen=True)
class PhraseSet:
    phrases: tuple[str, ...]
    source: str
    removed: tuple[str, ...]  # phrases dropped for containing OOV words

    def __len__(self) -> int:
        return len(self.phrases)


def _normalize(line: str) -> str:
    return " ".join(line.lower().split())


def load_phrases(source, lex: Lexicon) -> PhraseSet:
    """Load one phrase per line, lowercased, dropping any with OOV words."""
    if isinstance(source, (str, os.PathLike)):
        name = str(source)
        with open(source, encoding="utf-8") as fh:
            lines = fh.readlines()
    else:
        name = "<memory>"
        lines = list(source)
    kept: list[str] = []
    removed: list[str] = []
    for line in lines:
        phrase = _normalize(line)
        if not phrase:
            continue
        if all(word in lex for word in phrase.split(" ")):
            kept.append(phrase)
        else:
            removed.append(phrase)
    if not kept:
        raise PhraseSetError(f"no phrases left after vocabulary filtering ({name})")
    return PhraseSet(tuple(kept), name, tuple(removed))


def shipped_phrases_path() -> str:
    return os.path.join(os.path.dirname(__file__), "data", "phrases.txt")


class Phase(enum.Enum):
    PREPARATION = "preparation"
    PHRASE_SHOWN = "phrase_shown"
    TRANSCRIBING = "transcribing"
    SUBMITTED = "submitted"


@dataclass
class _CommittedChar:
    char: str
    touch: TouchPoint | None  # tap that produced it; key center if synthesized


class Session:
    """One participant's transcription session over an ordered phrase list.

    ``seed`` shuffles the phrase order once (reproducibly); ``None`` keeps
    the given order. Event times come from the caller: the simulator invents
    them, the UI service passes client timestamps through.
    """

    def __init__(
        self,
        layout: KeyboardLayout,
        lex: Lexicon,
        phrases: Sequence[str],
        *,
        sigma: float | None = None,
        beam: BeamConfig = DEFAULT_BEAM,
        seed: int | None = None,
        condition: str = "live",
        block: int = 1,
    ):
        if not phrases:
            raise PhraseSetError("session needs at least one phrase")
        self.layout = layout
        self.lexicon = lex
        self.model = SpatialModel(layout, sigma)
        self.beam = beam
        self.condition = condition
        self.block = block
        order = list(phrases)
        if seed is not None:
            random.Random(seed).shuffle(order)
        self._phrases = order
        self._trial_index = 0
        self.completed: list[TrialLog] = []
        self.phase = Phase.PREPARATION
        self._reset_trial_state()

    def _reset_trial_state(self) -> None:
        self._committed: list[_CommittedChar] = []
        self._events: list[InputEvent] = []

    # -- introspection ----------------------------------------------------

    @property
    def phrase(self) -> str:
        if self._trial_index >= len(self._phrases):
            raise SessionError("phrase pool exhausted")
        return self._phrases[self._trial_index]

    @property
    def trials_remaining(self) -> int:
        return len(self._phrases) - self._trial_index

    def committed_text(self) -> str:
        return "".join(c.char for c in self._committed)

    def backspaces_this_trial(self) -> int:
        return sum(1 for e in self._events if e.kind == "backspace")

    def tap_context(self) -> list[TouchPoint]:
        """Taps of the current partial word (synthesized for suggested chars)."""
        taps: list[TouchPoint] = []
        for c in reversed(self._committed):
            if c.char == " ":
                break
            taps.append(c.touch if c.touch is not None else key_center(self.layout, c.char))
        taps.reverse()
        return taps

    def suggestions(self) -> SuggestionPair:
        taps = self.tap_context()
        if not taps:
            return SuggestionPair()
        return decoder.suggest(self.model, self.lexicon, taps, beam=self.beam)

    # -- state transitions -------------------------------------------------

    def show_phrase(self) -> str:
        if self.phase is not Phase.PREPARATION:
            raise SessionError(f"cannot show phrase while {self.phase.value}")
        _ = self.phrase  # raises if the pool is exhausted
        self.phase = Phase.PHRASE_SHOWN
        return self.phrase

    def next_trial(self) -> str:
        if self.phase is not Phase.SUBMITTED:
            raise SessionError(f"cannot advance trial while {self.phase.value}")
        self._trial_index += 1
        if self._trial_index >= len(self._phrases):
            raise SessionError("phrase pool exhausted")
        self._reset_trial_state()
        self.phase = Phase.PHRASE_SHOWN
        return self.phrase

    def apply_tap(
        self,
        label: str,
        t_down: float,
        t_up: float,
        touch: TouchPoint | None = None,
    ) -> InputEvent:
        """Apply one registered key tap and return the logged event."""
        if self.phase is Phase.PREPARATION:
            # Warm-up taps on the empty field are allowed but never recorded.
            if label == SUBMIT or label in SUGGESTION_LABELS:
                raise SessionError(f"{label} is not available during preparation")
            return InputEvent(t_down, t_up, label, self._kind_of(label), touch)
        if self.phase is Phase.SUBMITTED:
            raise SessionError("trial already submitted")
        if self._events and t_down < self._events[-1].t_down:
            raise SessionError("event times must be non-decreasing")

        kind = self._kind_of(label)
        removed = ""
        inserted = ""
        if kind == "letter":
            inserted = label
            self._committed.append(_CommittedChar(label, touch))
        elif kind == "space":
            inserted = " "
            self._committed.append(_CommittedChar(" ", touch))
        elif kind == "backspace":
            if self._committed:
                removed = self._committed.pop().char
        elif kind == "suggestion":
            pair = self.suggestions()
            slot = SUGGESTION_LABELS.index(label)
            pick = pair.first if slot == 0 else pair.second
            if pick is None:
                raise SessionError(f"{label} is empty")
            # Replace the current partial word with the suggested word + space.
            partial = len(self.tap_context())
            removed = self.committed_text()[len(self._committed) - partial :]
            del self._committed[len(self._committed) - partial :]
            for ch in pick.word:
                self._committed.append(
                    _CommittedChar(ch, key_center(self.layout, ch))
                )
            self._committed.append(_CommittedChar(" ", None))
            inserted = pick.word + " "
        elif kind == "submit":
            if self.phase is not Phase.TRANSCRIBING:
                raise SessionError("nothing transcribed yet")

        event = InputEvent(t_down, t_up, label, kind, touch, removed, inserted)
        self._events.append(event)

        if kind == "submit":
            self.phase = Phase.SUBMITTED
            self.completed.append(self._freeze_log())
        elif self.phase is Phase.PHRASE_SHOWN and inserted:
            # The first committing input starts the timed transcription.
            self.phase = Phase.TRANSCRIBING
        return event

    @staticmethod
    def _kind_of(label: str) -> str:
        if label in LETTERS and len(label) == 1:
            return "letter"
        if label == SPACE:
            return "space"
        if label == BACKSPACE:
            return "backspace"
        if label in SUGGESTION_LABELS:
            return "suggestion"
        if label == SUBMIT:
            return "submit"
        raise SessionError(f"unknown key label {label!r}")

    def _freeze_log(self) -> TrialLog:
        return TrialLog(
            presented=self.phrase,
            events=list(self._events),
            transcribed=self.committed_text(),
            layout=self.layout.name,
            condition=self.condition,
            block=self.block,
            trial=self._trial_index,
        )
