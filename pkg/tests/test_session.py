import random

import pytest

from thumbtype.geometry import key_center
from thumbtype.lexicon import from_pairs
from thumbtype.session import (
    Phase,
    PhraseSetError,
    Session,
    SessionError,
    load_phrases,
)


def make_session(enlarged, lex, phrases=("the cat",), **kw):
    return Session(enlarged, lex, list(phrases), **kw)


def taps_for(session, word):
    return [key_center(session.layout, ch) for ch in word]


def start(session):
    session.show_phrase()
    return session


# --- phrase loading -----------------------------------------------------------


def test_load_phrases_filters_oov():
    lex = from_pairs([("the", 5), ("cat", 3), ("runs", 2)])
    ps = load_phrases(["the cat", "xqzt runs"], lex)
    assert ps.phrases == ("the cat",)
    assert ps.removed == ("xqzt runs",)


def test_load_phrases_normalizes_case_and_spacing():
    lex = from_pairs([("the", 5), ("cat", 3)])
    ps = load_phrases(["  The   Cat  "], lex)
    assert ps.phrases == ("the cat",)


def test_load_phrases_empty_result_is_error():
    lex = from_pairs([("the", 5)])
    with pytest.raises(PhraseSetError):
        load_phrases(["unknownword here"], lex)


def test_shipped_phrase_filter_counts_are_stable(shipped_lexicon, shipped_phrases):
    # frozen counts for the shipped data files; the OOV list drives removals
    assert len(shipped_phrases.phrases) == 96
    assert len(shipped_phrases.removed) == 9
    for phrase in shipped_phrases.removed:
        assert any(w not in shipped_lexicon for w in phrase.split())
    for phrase in shipped_phrases.phrases:
        assert all(w in shipped_lexicon for w in phrase.split())


# --- event application ----------------------------------------------------------


def test_letters_then_space_commit(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon))
    t = 0.0
    for ch in "cat":
        t += 500
        s.apply_tap(ch, t, t + 100, key_center(enlarged, ch))
    s.apply_tap("space", t + 500, t + 600)
    assert s.committed_text() == "cat "
    assert s.tap_context() == []


def test_suggestion_commits_word_and_space(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon))
    s.apply_tap("t", 100, 200, key_center(enlarged, "t"))
    s.apply_tap("h", 600, 700, key_center(enlarged, "h"))
    pair = s.suggestions()
    assert pair.first.word == "the"
    event = s.apply_tap("suggestion-0", 1200, 1300)
    assert event.removed == "th"
    assert event.inserted == "the "
    assert s.committed_text() == "the "
    assert s.tap_context() == []


def test_backspace_removes_one_char(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon))
    s.apply_tap("a", 100, 150)
    s.apply_tap("backspace", 600, 700)
    assert s.committed_text() == ""
    # backspace on an empty field commits nothing but stays legal
    s.apply_tap("backspace", 1100, 1200)
    assert s.committed_text() == ""


def test_backspace_across_space_restores_previous_context(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon))
    for i, ch in enumerate("the"):
        s.apply_tap(ch, 100 * (i + 1), 100 * (i + 1) + 50, key_center(enlarged, ch))
    s.apply_tap("space", 400, 450)
    assert s.tap_context() == []
    s.apply_tap("backspace", 500, 550)
    assert s.committed_text() == "the"
    assert s.tap_context() == taps_for(s, "the")


def test_context_after_suggestion_backspace_uses_key_centers(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon))
    s.apply_tap("t", 100, 150, key_center(enlarged, "t"))
    s.apply_tap("h", 200, 250, key_center(enlarged, "h"))
    s.apply_tap("suggestion-0", 300, 350)
    s.apply_tap("backspace", 400, 450)  # strips the auto space
    assert s.committed_text() == "the"
    assert s.tap_context() == taps_for(s, "the")


def test_empty_suggestion_slot_is_illegal(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon))
    with pytest.raises(SessionError):
        s.apply_tap("suggestion-0", 100, 150)  # no taps yet -> empty pair
    s.apply_tap("z", 100, 150, key_center(enlarged, "z"))
    s.apply_tap("z", 600, 650, key_center(enlarged, "z"))
    s.apply_tap("z", 1100, 1150, key_center(enlarged, "z"))
    assert s.suggestions().is_empty
    with pytest.raises(SessionError):
        s.apply_tap("suggestion-1", 1600, 1700)


def test_suggestions_empty_between_words(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon))
    s.apply_tap("t", 100, 150, key_center(enlarged, "t"))
    s.apply_tap("space", 600, 650)
    assert s.suggestions().is_empty


# --- state machine ----------------------------------------------------------------


def test_phase_flow(enlarged, tiny_lexicon):
    s = make_session(enlarged, tiny_lexicon, phrases=("the cat", "cat the"))
    assert s.phase is Phase.PREPARATION
    s.show_phrase()
    assert s.phase is Phase.PHRASE_SHOWN
    s.apply_tap("t", 100, 150)
    assert s.phase is Phase.TRANSCRIBING
    s.apply_tap("submit", 600, 650)
    assert s.phase is Phase.SUBMITTED
    assert len(s.completed) == 1
    s.next_trial()
    assert s.phase is Phase.PHRASE_SHOWN
    assert s.phrase == s.completed[0].presented or s.phrase != ""


def test_preparation_taps_are_not_recorded(enlarged, tiny_lexicon):
    s = make_session(enlarged, tiny_lexicon)
    s.apply_tap("a", 10, 20)
    s.apply_tap("backspace", 30, 40)
    s.show_phrase()
    assert s.committed_text() == ""
    s.apply_tap("t", 100, 150)
    s.apply_tap("submit", 600, 650)
    assert [e.label for e in s.completed[0].events] == ["t", "submit"]


def test_submit_requires_transcribing(enlarged, tiny_lexicon):
    s = make_session(enlarged, tiny_lexicon)
    with pytest.raises(SessionError):
        s.apply_tap("submit", 100, 150)
    s.show_phrase()
    with pytest.raises(SessionError):
        s.apply_tap("submit", 100, 150)


def test_backspace_does_not_start_the_trial(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon))
    s.apply_tap("backspace", 100, 150)
    assert s.phase is Phase.PHRASE_SHOWN
    s.apply_tap("t", 200, 250)
    assert s.phase is Phase.TRANSCRIBING


def test_taps_after_submit_are_illegal(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon))
    s.apply_tap("t", 100, 150)
    s.apply_tap("submit", 600, 650)
    with pytest.raises(SessionError):
        s.apply_tap("t", 700, 750)


def test_next_trial_requires_submitted(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon, phrases=("the cat", "cat")))
    with pytest.raises(SessionError):
        s.next_trial()


def test_phrase_pool_exhaustion(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon, phrases=("the cat",)))
    s.apply_tap("t", 100, 150)
    s.apply_tap("submit", 600, 650)
    with pytest.raises(SessionError):
        s.next_trial()


def test_event_times_must_be_ordered(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon))
    s.apply_tap("t", 1000, 1100)
    with pytest.raises(SessionError):
        s.apply_tap("h", 500, 600)


def test_unknown_label_rejected(enlarged, tiny_lexicon):
    s = start(make_session(enlarged, tiny_lexicon))
    with pytest.raises(SessionError):
        s.apply_tap("thumbs-up", 100, 150)


# --- phrase ordering ----------------------------------------------------------------


def test_seeded_phrase_order_is_reproducible(enlarged, tiny_lexicon):
    phrases = [f"the cat {i}".replace(str(i), "cat") for i in range(8)]
    phrases = [f"the cat" for _ in range(4)] + ["cat the", "the the", "cat cat", "the cat the"]
    a = Session(enlarged, tiny_lexicon, phrases, seed=99)
    b = Session(enlarged, tiny_lexicon, phrases, seed=99)
    assert a._phrases == b._phrases
    c = Session(enlarged, tiny_lexicon, phrases, seed=100)
    assert a._phrases != c._phrases or len(phrases) <= 2


def test_block_of_trials_gets_distinct_phrases(enlarged, tiny_lexicon):
    pool = ["the cat", "cat the", "the the", "cat cat", "the", "cat",
            "the cat the", "cat the cat", "the the the", "cat cat cat"]
    s = Session(enlarged, tiny_lexicon, pool, seed=1)
    seen = []
    for i in range(10):
        s.show_phrase() if i == 0 else s.next_trial()
        seen.append(s.phrase)
        s.apply_tap("t", 100, 150)
        s.apply_tap("submit", 600, 650)
    assert len(set(seen)) == 10


# --- invariants under random legal action streams -------------------------------------


def test_random_action_streams_keep_invariants(enlarged, shipped_lexicon):
    rng = random.Random(31)
    for trial in range(20):
        s = Session(enlarged, shipped_lexicon, ["the cat sat on the mat"], condition="fuzz")
        s.show_phrase()
        t = 0.0
        mirror = ""
        for _ in range(rng.randint(5, 60)):
            t += rng.uniform(1, 400)
            roll = rng.random()
            if roll < 0.55:
                ch = rng.choice("abcdefghijklmnopqrstuvwxyz")
                s.apply_tap(ch, t, t + 50, key_center(enlarged, ch))
                mirror += ch
            elif roll < 0.7:
                s.apply_tap("space", t, t + 50)
                mirror += " "
            elif roll < 0.85:
                s.apply_tap("backspace", t, t + 50)
                mirror = mirror[:-1]
            else:
                pair = s.suggestions()
                words = pair.words()
                if not words:
                    continue
                slot = rng.randrange(len(words))
                s.apply_tap(f"suggestion-{slot}", t, t + 50)
                head = mirror.rfind(" ") + 1
                mirror = mirror[:head] + words[slot] + " "
            assert s.committed_text() == mirror
            partial = mirror[mirror.rfind(" ") + 1 :]
            assert len(s.tap_context()) == len(partial)
        s.apply_tap("submit", t + 500, t + 600)
        log = s.completed[0]
        assert log.replay() == log.transcribed == mirror
