"""Independent reference implementations the tests check the library against.

Everything here is deliberately written the slow, obvious way and must stay
independent of the code paths under test.
"""

from __future__ import annotations

import math

from thumbtype.decoder import SpatialModel, Suggestion, SuggestionPair
from thumbtype.geometry import TouchPoint
from thumbtype.lexicon import Lexicon


def gaussian_letter_distribution(model: SpatialModel, p: TouchPoint) -> dict[str, float]:
    """Direct bivariate-Gaussian density per letter key, then normalize."""
    dens = {}
    norm = 1.0 / (2.0 * math.pi * model.sigma**2)
    for key in model.layout.letter_keys:
        d2 = (p.x - key.center.x) ** 2 + (p.y - key.center.y) ** 2
        dens[key.label] = norm * math.exp(-d2 / (2.0 * model.sigma**2))
    total = sum(dens.values())
    return {k: v / total for k, v in dens.items()}


def exhaustive_suggest(
    model: SpatialModel, lex: Lexicon, taps: list[TouchPoint], k: int = 2
) -> SuggestionPair:
    """Score every lexicon word long enough to cover the taps; take the best k."""
    n = len(taps)
    per_tap = [model.letter_probabilities(p) for p in taps]
    scored = []
    for word in lex.sorted_words:
        if len(word) < n:
            continue
        s = 1.0
        for i in range(n):
            s = s * per_tap[i][word[i]]
        scored.append((s * lex.lm_prob(word), word))
    scored.sort(key=lambda sw: (-sw[0], sw[1]))
    first = Suggestion(scored[0][1], scored[0][0]) if len(scored) >= 1 else None
    second = Suggestion(scored[1][1], scored[1][0]) if len(scored) >= 2 and k >= 2 else None
    return SuggestionPair(first, second)


def recursive_edit_distance(a: str, b: str) -> int:
    """Textbook exponential recursion, no memoization."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    if a[-1] == b[-1]:
        return recursive_edit_distance(a[:-1], b[:-1])
    return 1 + min(
        recursive_edit_distance(a[:-1], b),
        recursive_edit_distance(a, b[:-1]),
        recursive_edit_distance(a[:-1], b[:-1]),
    )


def reference_debounce(samples, engage=250.0, release=200.0):
    """Two-state reference automaton for the capacitive tap detector."""
    DOWN, UP = "down", "up"
    state = UP
    out = []
    start = None
    for t, v in samples:
        if state == UP and v > engage:
            state, start = DOWN, t
        elif state == DOWN and v < release:
            state = UP
            out.append((start, t))
    return out
