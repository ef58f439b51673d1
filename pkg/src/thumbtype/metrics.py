"""Text-entry metrics over transcription trial logs.

A trial log is the presented phrase plus the time-ordered input events
(letter, space, backspace, suggestion, submit) and the final committed text.
Metrics: words per minute, uncorrected/corrected error rate, backspace
count, inter-key interval, key press duration. Logs serialize as JSON lines
with one header record followed by one record per event.
"""

from __future__ import annotations

import json
import math
import os
import statistics
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Sequence

from .geometry import TouchPoint

KEY_INPUT_KINDS = ("letter", "space", "backspace", "suggestion")
EVENT_KINDS = KEY_INPUT_KINDS + ("submit",)

# Nominal word length used to convert characters to words.
CHARS_PER_WORD = 5


class MetricError(ValueError):
    pass


@dataclass(frozen=True)
class InputEvent:
    t_down: float
    t_up: float
    label: str
    kind: str
    touch: TouchPoint | None = None
    removed: str = ""
    inserted: str = ""

    def __post_init__(self):
        if self.kind not in EVENT_KINDS:
            raise MetricError(f"unknown event kind {self.kind!r}")
        if self.t_up < self.t_down:
            raise MetricError("t_up before t_down")
        if self.kind == "backspace" and len(self.removed) > 1:
            raise MetricError("backspace removes at most one character")


@dataclass
class TrialLog:
    presented: str
    events: list[InputEvent]
    transcribed: str
    layout: str = ""
    condition: str = ""
    block: int = 1
    trial: int = 0
    seed: int | None = None

    def key_inputs(self) -> list[InputEvent]:
        return [e for e in self.events if e.kind in KEY_INPUT_KINDS]

    def replay(self) -> str:
        """Recompute the committed text from the event deltas."""
        text = ""
        for e in self.events:
            if e.removed:
                if not text.endswith(e.removed):
                    raise MetricError(
                        f"delta removes {e.removed!r} but text ends {text[-8:]!r}"
                    )
                text = text[: len(text) - len(e.removed)]
            text += e.inserted
        return text


def msd(a: str, b: str) -> int:
    """Minimum string distance: unit-cost Levenshtein edit distance."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(min(cur[j - 1] + 1, prev[j] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def duration_ms(log: TrialLog) -> float:
    """First key-down to last key-down, in ms (submit excluded)."""
    inputs = log.key_inputs()
    if len(inputs) < 2:
        raise MetricError("need at least 2 key inputs")
    return inputs[-1].t_down - inputs[0].t_down


def wpm(log: TrialLog) -> float:
    """(characters - 1) / 5 words over the first-to-last-input duration."""
    dur = duration_ms(log)
    if dur <= 0:
        raise MetricError("non-positive entry duration")
    words = (len(log.transcribed) - 1) / CHARS_PER_WORD
    return words / (dur / 60000.0)


def _require_submit(log: TrialLog) -> None:
    if not any(e.kind == "submit" for e in log.events):
        raise MetricError("trial was never submitted")


def backspace_count(log: TrialLog) -> int:
    return sum(1 for e in log.events if e.kind == "backspace")


def uncorrected_error_rate(log: TrialLog) -> float:
    """MSD between presented and transcribed over the longer length, in %."""
    _require_submit(log)
    denom = max(len(log.presented), len(log.transcribed))
    if denom == 0:
        return 0.0
    return msd(log.presented, log.transcribed) / denom * 100.0


def corrected_error_rate(log: TrialLog) -> float:
    """Like the uncorrected rate but counting each backspace as an error.

    (MSD + backspaces) / (max length + backspaces) * 100; equals the
    uncorrected rate when no backspace was pressed.
    """
    _require_submit(log)
    b = backspace_count(log)
    denom = max(len(log.presented), len(log.transcribed)) + b
    if denom == 0:
        return 0.0
    return (msd(log.presented, log.transcribed) + b) / denom * 100.0


def iki_series(log: TrialLog) -> list[float]:
    """Differences of consecutive key-down times across all key inputs."""
    downs = [e.t_down for e in log.key_inputs()]
    if len(downs) < 2:
        raise MetricError("need at least 2 key inputs")
    return [b - a for a, b in zip(downs, downs[1:])]


def mean_iki(log: TrialLog) -> float:
    return statistics.fmean(iki_series(log))


def kpd_series(log: TrialLog) -> list[float]:
    """Per-input press duration: t_up - t_down."""
    inputs = log.key_inputs()
    if not inputs:
        raise MetricError("log has no key inputs")
    return [e.t_up - e.t_down for e in inputs]


def mean_kpd(log: TrialLog) -> float:
    return statistics.fmean(kpd_series(log))


@dataclass(frozen=True)
class MetricsReport:
    wpm: float
    uer_pct: float
    cer_pct: float
    backspace_count: int
    mean_iki_ms: float
    mean_kpd_ms: float
    char_count: int
    duration_ms: float


def report(log: TrialLog) -> MetricsReport:
    return MetricsReport(
        wpm=wpm(log),
        uer_pct=uncorrected_error_rate(log),
        cer_pct=corrected_error_rate(log),
        backspace_count=backspace_count(log),
        mean_iki_ms=mean_iki(log),
        mean_kpd_ms=mean_kpd(log),
        char_count=len(log.transcribed),
        duration_ms=duration_ms(log),
    )


# (attribute on MetricsReport, human-readable row label)
SUMMARY_METRICS = (
    ("wpm", "Text Entry Speed (WPM)"),
    ("uer_pct", "UER (%)"),
    ("cer_pct", "CER (%)"),
    ("mean_iki_ms", "IKI (ms)"),
    ("backspace_count", "Backspace Usage (count)"),
    ("mean_kpd_ms", "Key Press Duration (ms)"),
)


@dataclass(frozen=True)
class GroupStats:
    mean: float
    sd: float  # sample (n-1); 0.0 when n == 1
    n: int


@dataclass
class Summary:
    """Per-group mean/sd for each summary metric, in stable group order."""

    groups: list[str]
    table: dict[str, dict[str, GroupStats]]  # group -> metric attr -> stats

    def to_csv(self) -> str:
        lines = ["group,metric,mean,sd,n"]
        for g in self.groups:
            for attr, _label in SUMMARY_METRICS:
                st = self.table[g][attr]
                lines.append(f"{g},{attr},{st.mean!r},{st.sd!r},{st.n}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        label_w = max(len(lbl) for _a, lbl in SUMMARY_METRICS)
        col_w = max(14, max(len(g) for g in self.groups) + 2)
        header = " " * label_w + "".join(g.rjust(col_w) for g in self.groups)
        lines = [header]
        for attr, label in SUMMARY_METRICS:
            cells = []
            for g in self.groups:
                st = self.table[g][attr]
                cells.append(f"{st.mean:.1f} ({st.sd:.1f})".rjust(col_w))
            lines.append(label.ljust(label_w) + "".join(cells))
        return "\n".join(lines) + "\n"


def summarize(
    logs: Sequence[TrialLog],
    group_key: Callable[[TrialLog], str] | None = None,
) -> Summary:
    """Group trials and compute mean and sample sd of every summary metric.

    Default grouping is "<condition>/block<block>"; single-trial groups get
    sd = 0.0 and are flagged by their n.
    """
    if not logs:
        raise MetricError("no logs to summarize")
    if group_key is None:
        group_key = lambda log: f"{log.condition}/block{log.block}"
    # Stable over input order so recomputation from files matches exactly.
    logs = sorted(logs, key=lambda l: (l.condition, l.block, l.trial))
    grouped: dict[str, list[MetricsReport]] = {}
    order: list[str] = []
    for log in logs:
        g = group_key(log)
        if g not in grouped:
            grouped[g] = []
            order.append(g)
        grouped[g].append(report(log))

    table: dict[str, dict[str, GroupStats]] = {}
    for g in order:
        reports = grouped[g]
        row: dict[str, GroupStats] = {}
        for attr, _label in SUMMARY_METRICS:
            values = [float(getattr(r, attr)) for r in reports]
            mean = statistics.fmean(values)
            sd = statistics.stdev(values) if len(values) >= 2 else 0.0
            row[attr] = GroupStats(mean, sd, len(values))
        table[g] = row
    return Summary(order, table)


# --- log (de)serialization ------------------------------------------------


def save_log(log: TrialLog, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_log(log))


def dumps_log(log: TrialLog) -> str:
    header = {
        "record": "header",
        "presented": log.presented,
        "transcribed": log.transcribed,
        "layout": log.layout,
        "condition": log.condition,
        "block": log.block,
        "trial": log.trial,
        "seed": log.seed,
    }
    lines = [json.dumps(header)]
    for e in log.events:
        rec = {
            "record": "event",
            "kind": e.kind,
            "label": e.label,
            "t_down": e.t_down,
            "t_up": e.t_up,
            "touch": None if e.touch is None else [e.touch.x, e.touch.y],
            "removed": e.removed,
            "inserted": e.inserted,
        }
        lines.append(json.dumps(rec))
    return "\n".join(lines) + "\n"


def _build_log(header: dict, events: list[InputEvent]) -> TrialLog:
    log = TrialLog(
        presented=header["presented"],
        events=events,
        transcribed=header["transcribed"],
        layout=header.get("layout", ""),
        condition=header.get("condition", ""),
        block=int(header.get("block", 1)),
        trial=int(header.get("trial", 0)),
        seed=header.get("seed"),
    )
    if log.replay() != log.transcribed:
        raise MetricError("event deltas do not replay to the stored text")
    return log


def loads_logs(text: str) -> list[TrialLog]:
    """Parse one or more concatenated trial logs (header starts each one)."""
    logs: list[TrialLog] = []
    header: dict | None = None
    events: list[InputEvent] = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        try:
            rec = json.loads(ln)
        except json.JSONDecodeError as exc:
            raise MetricError(f"bad log record: {exc}") from exc
        kind = rec.get("record")
        if kind == "header":
            if header is not None:
                logs.append(_build_log(header, events))
            header, events = rec, []
        elif kind == "event":
            if header is None:
                raise MetricError("event record before any header")
            touch = rec.get("touch")
            events.append(
                InputEvent(
                    t_down=float(rec["t_down"]),
                    t_up=float(rec["t_up"]),
                    label=str(rec["label"]),
                    kind=str(rec["kind"]),
                    touch=None if touch is None else TouchPoint(touch[0], touch[1]),
                    removed=rec.get("removed", ""),
                    inserted=rec.get("inserted", ""),
                )
            )
        else:
            raise MetricError(f"unexpected record type {kind!r}")
    if header is None:
        raise MetricError("no header record in log")
    logs.append(_build_log(header, events))
    return logs


def loads_log(text: str) -> TrialLog:
    logs = loads_logs(text)
    if len(logs) != 1:
        raise MetricError(f"expected exactly one log, found {len(logs)}")
    return logs[0]


def load_log(path) -> TrialLog:
    with open(path, encoding="utf-8") as fh:
        return loads_log(fh.read())


def load_log_dir(path) -> tuple[list[TrialLog], list[str]]:
    """Load every *.jsonl log under ``path``; returns (logs, error strings).

    A file may hold several concatenated logs (session exports do).
    """
    logs: list[TrialLog] = []
    errors: list[str] = []
    names = sorted(n for n in os.listdir(path) if n.endswith(".jsonl"))
    if not names:
        raise MetricError(f"no .jsonl logs in {path}")
    for name in names:
        full = os.path.join(path, name)
        try:
            with open(full, encoding="utf-8") as fh:
                logs.extend(loads_logs(fh.read()))
        except (MetricError, OSError, KeyError, ValueError) as exc:
            errors.append(f"{name}: {exc}")
    return logs, errors
