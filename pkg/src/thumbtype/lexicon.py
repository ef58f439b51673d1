"""Frequency-weighted word list with normalized probabilities and prefix lookup.

The source format is plain TSV, one ``word<TAB>count`` row per line. Words
are lowercased at ingestion; anything containing characters outside a-z is
dropped (the keyboard only has letter keys). Counts for duplicate words are
summed. Probabilities are raw counts normalized over the kept entries.
"""

from __future__ import annotations

import bisect
import heapq
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

_NORMALIZATION_TOL = 1e-9


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class WordEntry:
    word: str
    frequency: int
    lm_prob: float


@dataclass(frozen=True)
class IngestReport:
    kept: int
    dropped_malformed: int
    dropped_nonletter: int
    merged_duplicates: int


class Lexicon:
    """Immutable word->probability table with an ordered prefix index."""

    def __init__(self, counts: dict[str, int], report: IngestReport | None = None):
        if not counts:
            raise LexiconError("empty lexicon")
        for w, c in counts.items():
            if not w or not all("a" <= ch <= "z" for ch in w):
                raise LexiconError(f"invalid word {w!r}")
            if c <= 0:
                raise LexiconError(f"non-positive count for {w!r}")
        total = sum(counts.values())
        self._entries = {
            w: WordEntry(w, c, c / total) for w, c in counts.items()
        }
        self._words = sorted(counts)
        self._lm = {w: self._entries[w].lm_prob for w in self._words}
        self.report = report or IngestReport(len(counts), 0, 0, 0)
        s = sum(self._lm.values())
        if abs(s - 1.0) > _NORMALIZATION_TOL:
            raise LexiconError(f"probabilities sum to {s!r}, not 1")

    def __len__(self) -> int:
        return len(self._words)

    def __contains__(self, word: str) -> bool:
        return word.lower() in self._entries

    def __iter__(self) -> Iterator[WordEntry]:
        return (self._entries[w] for w in self._words)

    @property
    def sorted_words(self) -> list[str]:
        """All words in lexicographic order (do not mutate)."""
        return self._words

    def entry(self, word: str) -> WordEntry:
        return self._entries[word]

    def lm_prob(self, word: str) -> float:
        """Normalized probability, 0.0 for out-of-vocabulary words."""
        return self._lm.get(word, 0.0)

    def prefix_range(self, prefix: str, lo: int = 0, hi: int | None = None) -> tuple[int, int]:
        """Half-open index range of sorted_words sharing ``prefix``."""
        if hi is None:
            hi = len(self._words)
        start = bisect.bisect_left(self._words, prefix, lo, hi)
        # '{' is the code point right after 'z', so this bounds the prefix block.
        end = bisect.bisect_left(self._words, prefix + "{", start, hi)
        return start, end

    def words_with_prefix(self, prefix: str, limit: int | None = None) -> list[WordEntry]:
        """Entries whose word starts with ``prefix``, most probable first.

        Ordered by descending lm_prob, ties by word. An empty prefix matches
        the whole lexicon.
        """
        lo, hi = self.prefix_range(prefix)
        matches = self._words[lo:hi]
        key = lambda w: (-self._lm[w], w)
        if limit is not None and limit < len(matches):
            picked = heapq.nsmallest(limit, matches, key=key)
        else:
            picked = sorted(matches, key=key)
        return [self._entries[w] for w in picked]


def parse_rows(lines: Iterable[str]) -> tuple[dict[str, int], IngestReport]:
    counts: dict[str, int] = {}
    malformed = 0
    nonletter = 0
    merged = 0
    for line in lines:
        line = line.rstrip("\n")
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            malformed += 1
            continue
        word, raw_count = parts[0].strip().lower(), parts[1].strip()
        try:
            count = int(raw_count)
        except ValueError:
            malformed += 1
            continue
        if count <= 0:
            malformed += 1
            continue
        if not word or not all("a" <= ch <= "z" for ch in word):
            nonletter += 1
            continue
        if word in counts:
            merged += 1
        counts[word] = counts.get(word, 0) + count
    report = IngestReport(len(counts), malformed, nonletter, merged)
    return counts, report


def load_lexicon(source) -> Lexicon:
    """Load a lexicon from a TSV path or an iterable of text rows."""
    if isinstance(source, (str, os.PathLike)):
        try:
            with open(source, encoding="utf-8") as fh:
                counts, report = parse_rows(fh)
        except OSError as exc:
            raise LexiconError(f"cannot read lexicon {source}: {exc}") from exc
    else:
        counts, report = parse_rows(source)
    if not counts:
        raise LexiconError("no usable rows in lexicon source")
    return Lexicon(counts, report)


def from_pairs(pairs: Iterable[tuple[str, int]]) -> Lexicon:
    """Build a lexicon directly from (word, count) pairs (mainly for tests)."""
    counts: dict[str, int] = {}
    merged = 0
    for word, count in pairs:
        word = word.lower()
        if word in counts:
            merged += 1
        counts[word] = counts.get(word, 0) + int(count)
    return Lexicon(counts, IngestReport(len(counts), 0, 0, merged))


def shipped_lexicon_path() -> str:
    return os.path.join(os.path.dirname(__file__), "data", "lexicon.tsv")


def load_shipped_lexicon() -> Lexicon:
    return load_lexicon(shipped_lexicon_path())
