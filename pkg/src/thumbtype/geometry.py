"""Millimeter-space virtual keyboard geometry and nearest-center key registration.

Layouts are flat 2D: the origin sits at the center of the 'q' key, +x runs
right and +y runs down. All dimensions are millimeters. Two presets are
shipped: "original" (5.5 mm keys, 1 mm gaps, i.e. a phone-sized board) and
"enlarged" (6 mm keys, 2 mm gaps).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

LETTER_ROWS = ("qwertyuiop", "asdfghjkl", "zxcvbnm")
LETTERS = "".join(LETTER_ROWS)

SPACE = "space"
BACKSPACE = "backspace"
SUBMIT = "submit"
SUGGESTION_0 = "suggestion-0"
SUGGESTION_1 = "suggestion-1"
SUGGESTION_LABELS = (SUGGESTION_0, SUGGESTION_1)
CONTROL_LABELS = (SPACE, BACKSPACE, SUBMIT) + SUGGESTION_LABELS

# Preset name -> (key width mm, inter-key gap mm).
PRESETS = {
    "original": (5.5, 1.0),
    "enlarged": (6.0, 2.0),
}

# Horizontal row offsets in column-pitch units (standard smartphone QWERTY).
_ROW_OFFSETS = (0.0, 0.5, 1.0)


class LayoutError(ValueError):
    """Raised for unknown presets, bad dimensions, or invariant violations."""


@dataclass(frozen=True)
class TouchPoint:
    """A point on the keyboard plane, in the same mm frame as key centers."""

    x: float
    y: float

    def distance_to(self, other: "TouchPoint") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Key:
    label: str
    center: TouchPoint
    width: float
    height: float

    def contains(self, p: TouchPoint) -> bool:
        return (
            abs(p.x - self.center.x) <= self.width / 2
            and abs(p.y - self.center.y) <= self.height / 2
        )


@dataclass(frozen=True)
class KeyboardLayout:
    name: str
    keys: tuple[Key, ...]
    key_width: float
    key_gap: float
    row_pitch: float
    origin: TouchPoint

    @property
    def column_pitch(self) -> float:
        return self.key_width + self.key_gap

    def key(self, label: str) -> Key:
        try:
            return self._by_label[label]
        except KeyError:
            raise KeyError(f"no key {label!r} in layout {self.name!r}") from None

    @property
    def _by_label(self) -> dict[str, Key]:
        # Frozen dataclass: cache on first use via object.__setattr__.
        cached = self.__dict__.get("_label_map")
        if cached is None:
            cached = {k.label: k for k in self.keys}
            object.__setattr__(self, "_label_map", cached)
        return cached

    @property
    def letter_keys(self) -> tuple[Key, ...]:
        return tuple(k for k in self.keys if k.label in LETTERS)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "unit": "mm",
            "key_width": self.key_width,
            "key_gap": self.key_gap,
            "row_pitch": self.row_pitch,
            "origin": [self.origin.x, self.origin.y],
            "keys": [
                {
                    "label": k.label,
                    "center": [k.center.x, k.center.y],
                    "width": k.width,
                    "height": k.height,
                }
                for k in self.keys
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "KeyboardLayout":
        try:
            keys = tuple(
                Key(
                    label=item["label"],
                    center=TouchPoint(float(item["center"][0]), float(item["center"][1])),
                    width=float(item["width"]),
                    height=float(item["height"]),
                )
                for item in doc["keys"]
            )
            layout = cls(
                name=str(doc["name"]),
                keys=keys,
                key_width=float(doc["key_width"]),
                key_gap=float(doc["key_gap"]),
                row_pitch=float(doc["row_pitch"]),
                origin=TouchPoint(float(doc["origin"][0]), float(doc["origin"][1])),
            )
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise LayoutError(f"malformed layout document: {exc}") from exc
        validate_layout(layout)
        return layout

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=2)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "KeyboardLayout":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def build_layout(
    name: str = "enlarged",
    *,
    key_width: float | None = None,
    key_gap: float | None = None,
) -> KeyboardLayout:
    """Construct a QWERTY layout from a preset name or explicit dimensions.

    Letter keys are square and the row pitch equals the column pitch, so the
    single gap parameter applies in both axes. Two suggestion buttons sit one
    row pitch above the top letter row, each spanning half the keyboard
    width; backspace closes the third letter row; space and submit form the
    bottom row.
    """
    if name in PRESETS:
        preset_w, preset_g = PRESETS[name]
        width = preset_w if key_width is None else key_width
        gap = preset_g if key_gap is None else key_gap
    else:
        if key_width is None or key_gap is None:
            raise LayoutError(
                f"unknown preset {name!r}; custom layouts need key_width and key_gap"
            )
        width, gap = key_width, key_gap

    if width <= 0 or gap <= 0:
        raise LayoutError(f"dimensions must be positive, got width={width} gap={gap}")

    pitch = width + gap
    row_pitch = pitch
    height = width  # square letter keys

    keys: list[Key] = []
    for row, (letters, offset) in enumerate(zip(LETTER_ROWS, _ROW_OFFSETS)):
        x0 = offset * pitch
        y = row * row_pitch
        for col, ch in enumerate(letters):
            keys.append(Key(ch, TouchPoint(x0 + col * pitch, y), width, height))

    # Keyboard span from q's left edge to p's right edge.
    left_edge = -width / 2
    right_edge = 9 * pitch + width / 2
    board_width = right_edge - left_edge

    # Two suggestion buttons directly above row 1, each half the board wide.
    sug_y = -row_pitch
    sug_w = board_width / 2
    keys.append(Key(SUGGESTION_0, TouchPoint(left_edge + sug_w / 2, sug_y), sug_w, height))
    keys.append(Key(SUGGESTION_1, TouchPoint(left_edge + 1.5 * sug_w, sug_y), sug_w, height))

    # Backspace at the right end of the third letter row.
    bs_w = 1.5 * width
    keys.append(Key(BACKSPACE, TouchPoint(right_edge - bs_w / 2, 2 * row_pitch), bs_w, height))

    # Bottom row: wide space bar centered, submit to its right.
    bottom_y = 3 * row_pitch
    space_w = 5 * pitch - gap
    space_cx = (left_edge + right_edge) / 2
    keys.append(Key(SPACE, TouchPoint(space_cx, bottom_y), space_w, height))
    submit_w = 2 * pitch - gap
    submit_cx = space_cx + space_w / 2 + gap + submit_w / 2
    keys.append(Key(SUBMIT, TouchPoint(submit_cx, bottom_y), submit_w, height))

    layout = KeyboardLayout(
        name=name,
        keys=tuple(keys),
        key_width=width,
        key_gap=gap,
        row_pitch=row_pitch,
        origin=TouchPoint(0.0, 0.0),
    )
    validate_layout(layout)
    return layout


def validate_layout(layout: KeyboardLayout) -> None:
    """Check layout invariants; raise LayoutError on the first violation."""
    labels = [k.label for k in layout.keys]
    if len(labels) != len(set(labels)):
        raise LayoutError("duplicate key labels")
    for k in layout.keys:
        if k.width <= 0 or k.height <= 0:
            raise LayoutError(f"key {k.label!r} has non-positive size")
        if not (math.isfinite(k.center.x) and math.isfinite(k.center.y)):
            raise LayoutError(f"key {k.label!r} has non-finite center")

    present = [l for l in labels if l in LETTERS]
    if sorted(present) != sorted(LETTERS):
        raise LayoutError("layout must contain each of the 26 letters exactly once")

    pitch = layout.column_pitch
    by_label = {k.label: k for k in layout.keys}
    # QWERTY rows: shared y per row, half/full pitch offsets for rows 2 and 3.
    for row, (letters, offset) in enumerate(zip(LETTER_ROWS, _ROW_OFFSETS)):
        row_keys = [by_label[ch] for ch in letters]
        y = row_keys[0].center.y
        for col, k in enumerate(row_keys):
            if abs(k.center.y - y) > 1e-9:
                raise LayoutError(f"row {row} is not horizontal at {k.label!r}")
            expect_x = offset * pitch + col * pitch
            base_x = by_label["q"].center.x
            if abs(k.center.x - (base_x + expect_x)) > 1e-9:
                raise LayoutError(f"key {k.label!r} off its QWERTY grid position")

    for slot in SUGGESTION_LABELS:
        sug = by_label.get(slot)
        if sug is None:
            raise LayoutError(f"missing {slot}")
        expect_y = by_label["q"].center.y - layout.row_pitch
        if abs(sug.center.y - expect_y) > 1e-9:
            raise LayoutError(f"{slot} is not one row pitch above the top letter row")

    ks = layout.keys
    for i in range(len(ks)):
        for j in range(i + 1, len(ks)):
            a, b = ks[i], ks[j]
            ox = (a.width + b.width) / 2 - abs(a.center.x - b.center.x)
            oy = (a.height + b.height) / 2 - abs(a.center.y - b.center.y)
            if ox > 1e-9 and oy > 1e-9:
                raise LayoutError(f"keys {a.label!r} and {b.label!r} overlap")


def nearest_key(
    layout: KeyboardLayout,
    p: TouchPoint,
    labels: Iterable[str] | None = None,
) -> Key:
    """Return the candidate key whose center is closest to ``p``.

    ``labels`` restricts the candidate set (e.g. letters only); ``None``
    means every key. Distance ties break toward the smaller label so the
    result is deterministic.
    """
    if labels is None:
        candidates: Sequence[Key] = layout.keys
    else:
        candidates = [layout.key(l) for l in labels]
    if not candidates:
        raise ValueError("empty candidate set")

    best: Key | None = None
    best_d = math.inf
    for k in sorted(candidates, key=lambda k: k.label):
        d = (p.x - k.center.x) ** 2 + (p.y - k.center.y) ** 2
        if d < best_d:
            best, best_d = k, d
    assert best is not None
    return best


def key_center(layout: KeyboardLayout, label: str) -> TouchPoint:
    """Center of the key with the given label; KeyError if absent."""
    return layout.key(label).center
