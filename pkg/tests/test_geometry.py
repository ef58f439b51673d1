import json
import math
import random

import pytest

from thumbtype.geometry import (
    LETTERS,
    KeyboardLayout,
    LayoutError,
    TouchPoint,
    build_layout,
    key_center,
    nearest_key,
    validate_layout,
)


def test_enlarged_preset_dimensions(enlarged):
    assert enlarged.key_width == 6.0
    assert enlarged.key_gap == 2.0
    assert enlarged.column_pitch == 8.0
    assert enlarged.row_pitch == 8.0


def test_original_preset_dimensions(original):
    assert original.key("q").width == 5.5
    assert original.key_gap == 1.0
    assert original.column_pitch == 6.5


def test_letter_grid_anchors(enlarged):
    q = key_center(enlarged, "q")
    assert (q.x, q.y) == (0.0, 0.0)
    w = key_center(enlarged, "w")
    assert (w.x - q.x, w.y - q.y) == (8.0, 0.0)
    a = key_center(enlarged, "a")
    assert (a.x - q.x, a.y - q.y) == (4.0, 8.0)


def test_adjacent_same_row_distance_is_one_pitch(enlarged):
    assert key_center(enlarged, "q").distance_to(key_center(enlarged, "w")) == 8.0


def test_each_letter_exactly_once(enlarged, original):
    for layout in (enlarged, original):
        labels = [k.label for k in layout.letter_keys]
        assert sorted(labels) == sorted(LETTERS)


def test_suggestion_buttons_above_top_row(enlarged):
    for slot in ("suggestion-0", "suggestion-1"):
        assert enlarged.key(slot).center.y == -enlarged.row_pitch


def test_unknown_preset_rejected():
    with pytest.raises(LayoutError):
        build_layout("huge")


def test_custom_layout_needs_both_dimensions():
    with pytest.raises(LayoutError):
        build_layout("custom", key_width=7.0)
    custom = build_layout("custom", key_width=7.0, key_gap=3.0)
    assert custom.column_pitch == 10.0


def test_nonpositive_dimensions_rejected():
    with pytest.raises(LayoutError):
        build_layout("custom", key_width=0.0, key_gap=1.0)
    with pytest.raises(LayoutError):
        build_layout("custom", key_width=6.0, key_gap=-1.0)


def test_nearest_key_at_exact_center(enlarged):
    assert nearest_key(enlarged, key_center(enlarged, "k")).label == "k"


def test_nearest_key_midpoint_tie_breaks_by_label(enlarged):
    j, k = key_center(enlarged, "j"), key_center(enlarged, "k")
    mid = TouchPoint((j.x + k.x) / 2, (j.y + k.y) / 2)
    assert nearest_key(enlarged, mid, LETTERS).label == "j"


def test_nearest_key_empty_candidates(enlarged):
    with pytest.raises(ValueError):
        nearest_key(enlarged, TouchPoint(0, 0), [])


def test_nearest_key_matches_exhaustive_scan(enlarged, original):
    rng = random.Random(42)
    for layout in (enlarged, original):
        keys = sorted(layout.keys, key=lambda k: k.label)
        for _ in range(1000):
            p = TouchPoint(rng.uniform(-15, 90), rng.uniform(-15, 35))
            got = nearest_key(layout, p)
            best = min(keys, key=lambda k: ((p.x - k.center.x) ** 2 + (p.y - k.center.y) ** 2, k.label))
            assert got.label == best.label


def test_point_inside_letter_rect_registers_that_letter(enlarged):
    rng = random.Random(7)
    for _ in range(500):
        target = rng.choice(LETTERS)
        k = enlarged.key(target)
        p = TouchPoint(
            k.center.x + rng.uniform(-k.width / 2, k.width / 2),
            k.center.y + rng.uniform(-k.height / 2, k.height / 2),
        )
        assert nearest_key(enlarged, p, LETTERS).label == target


def test_serialization_round_trip_is_bit_exact(enlarged, tmp_path):
    path = tmp_path / "layout.json"
    enlarged.save(path)
    loaded = KeyboardLayout.load(path)
    assert loaded.name == enlarged.name
    for a, b in zip(enlarged.keys, loaded.keys):
        assert a.label == b.label
        assert (a.center.x, a.center.y) == (b.center.x, b.center.y)
        assert (a.width, a.height) == (b.width, b.height)


def test_shipped_layout_files_match_builders(tmp_path):
    import thumbtype.lexicon as lx
    import os

    data = os.path.join(os.path.dirname(lx.__file__), "data", "layouts")
    for name in ("original", "enlarged"):
        shipped = KeyboardLayout.load(os.path.join(data, f"{name}.json"))
        built = build_layout(name)
        for a, b in zip(shipped.keys, built.keys):
            assert a == b


def test_validate_rejects_overlap(enlarged):
    doc = enlarged.to_dict()
    doc["keys"][1]["center"] = doc["keys"][0]["center"]  # move 'w' onto 'q'
    with pytest.raises(LayoutError):
        KeyboardLayout.from_dict(doc)


def test_validate_rejects_missing_letter(enlarged):
    doc = enlarged.to_dict()
    doc["keys"] = [k for k in doc["keys"] if k["label"] != "z"]
    with pytest.raises(LayoutError):
        KeyboardLayout.from_dict(doc)


def test_unknown_label_raises_key_error(enlarged):
    with pytest.raises(KeyError):
        key_center(enlarged, "suggestion-9")
