"""HTTP session service: the interactive counterpart of the simulator.

JSON API under /api (see README for the schema). Each session serializes
its events behind a lock; decoding and metrics always run server-side so a
thin client can only ever display what the core computed. With ``ui_dir``
set, the static web UI is mounted at /.
"""

from __future__ import annotations

import itertools
import os
import threading
from contextlib import asynccontextmanager
from dataclasses import asdict

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel, Field

from . import metrics
from .decoder import BeamConfig, DEFAULT_BEAM
from .geometry import LETTERS, SPACE, KeyboardLayout, TouchPoint, nearest_key
from .lexicon import Lexicon

# Bare touch points register like simulated character aims: on the nearest
# committing character key. Control keys always arrive labeled.
_CHAR_CANDIDATES = tuple(LETTERS) + (SPACE,)
from .session import Phase, PhraseSetError, Session, SessionError, load_phrases, shipped_phrases_path


class OpenSessionRequest(BaseModel):
    condition: str = "live"
    seed: int | None = None


class EventRequest(BaseModel):
    t_down: float
    t_up: float
    label: str | None = None
    touch: tuple[float, float] | None = None


class SubmitRequest(BaseModel):
    t_down: float
    t_up: float


class _Slot:
    def __init__(self, session: Session):
        self.session = session
        self.lock = threading.Lock()


def _pair_doc(pair) -> list[dict]:
    out = []
    for s in (pair.first, pair.second):
        if s is not None:
            out.append({"word": s.word, "score": s.score})
    return out


def create_app(
    layout: KeyboardLayout,
    lex: Lexicon,
    *,
    sigma: float | None = None,
    beam: BeamConfig = DEFAULT_BEAM,
    phrases: list[str] | None = None,
    log_dir: str | None = None,
    ui_dir: str | None = None,
) -> FastAPI:
    if phrases is None:
        phrases = list(load_phrases(shipped_phrases_path(), lex).phrases)

    slots: dict[str, _Slot] = {}
    ids = itertools.count(1)

    def flush_logs() -> None:
        if log_dir is None:
            return
        os.makedirs(log_dir, exist_ok=True)
        for sid, slot in slots.items():
            for log in slot.session.completed:
                name = f"session{sid}_t{log.trial:02d}.jsonl"
                with open(os.path.join(log_dir, name), "w", encoding="utf-8") as fh:
                    fh.write(metrics.dumps_log(log))

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        flush_logs()

    app = FastAPI(title="thumbtype session service", lifespan=lifespan)

    def get_slot(sid: str) -> _Slot:
        slot = slots.get(sid)
        if slot is None:
            raise HTTPException(404, f"no session {sid}")
        return slot

    def state_doc(session: Session) -> dict:
        shown = session.phase in (Phase.PHRASE_SHOWN, Phase.TRANSCRIBING, Phase.SUBMITTED)
        return {
            "phase": session.phase.value,
            "phrase": session.phrase if shown else None,
            "committed": session.committed_text(),
            "suggestions": _pair_doc(session.suggestions()),
            "backspaces": session.backspaces_this_trial(),
            "trials_completed": len(session.completed),
            "trials_remaining": session.trials_remaining,
        }

    @app.get("/api/layout")
    def get_layout():
        return layout.to_dict()

    @app.post("/api/sessions")
    def open_session(req: OpenSessionRequest):
        sid = str(next(ids))
        session = Session(
            layout,
            lex,
            phrases,
            sigma=sigma,
            beam=beam,
            seed=req.seed,
            condition=req.condition,
        )
        slots[sid] = _Slot(session)
        return {"session_id": sid, **state_doc(session)}

    @app.get("/api/sessions/{sid}")
    def get_state(sid: str):
        slot = get_slot(sid)
        with slot.lock:
            return state_doc(slot.session)

    @app.post("/api/sessions/{sid}/phrase")
    def show_phrase(sid: str):
        slot = get_slot(sid)
        with slot.lock:
            try:
                if slot.session.phase is Phase.SUBMITTED:
                    slot.session.next_trial()
                else:
                    slot.session.show_phrase()
            except SessionError as exc:
                raise HTTPException(409, str(exc))
            return state_doc(slot.session)

    @app.post("/api/sessions/{sid}/events")
    def post_event(sid: str, req: EventRequest):
        slot = get_slot(sid)
        with slot.lock:
            session = slot.session
            touch = None if req.touch is None else TouchPoint(*req.touch)
            label = req.label
            if label is None:
                if touch is None:
                    raise HTTPException(422, "event needs a label or a touch point")
                label = nearest_key(layout, touch, _CHAR_CANDIDATES).label
            try:
                event = session.apply_tap(label, req.t_down, req.t_up, touch)
            except SessionError as exc:
                raise HTTPException(409, str(exc))
            return {"registered": event.label, "kind": event.kind, **state_doc(session)}

    @app.get("/api/sessions/{sid}/suggestions")
    def get_suggestions(sid: str):
        slot = get_slot(sid)
        with slot.lock:
            return {"suggestions": _pair_doc(slot.session.suggestions())}

    @app.post("/api/sessions/{sid}/submit")
    def submit(sid: str, req: SubmitRequest):
        slot = get_slot(sid)
        with slot.lock:
            session = slot.session
            try:
                session.apply_tap("submit", req.t_down, req.t_up)
            except SessionError as exc:
                raise HTTPException(409, str(exc))
            log = session.completed[-1]
            try:
                trial_report = asdict(metrics.report(log))
            except metrics.MetricError as exc:
                trial_report = {"error": str(exc)}
            return {
                "presented": log.presented,
                "transcribed": log.transcribed,
                "report": trial_report,
                **state_doc(session),
            }

    @app.get("/api/sessions/{sid}/metrics")
    def fetch_metrics(sid: str):
        slot = get_slot(sid)
        with slot.lock:
            trials = []
            for log in slot.session.completed:
                try:
                    doc = asdict(metrics.report(log))
                except metrics.MetricError as exc:
                    doc = {"error": str(exc)}
                trials.append({"trial": log.trial, "presented": log.presented, **doc})
            return {"trials": trials}

    @app.get("/api/sessions/{sid}/log", response_class=PlainTextResponse)
    def export_log(sid: str):
        slot = get_slot(sid)
        with slot.lock:
            completed = slot.session.completed
            if not completed:
                raise HTTPException(409, "no submitted trials to export")
            return "".join(metrics.dumps_log(log) for log in completed)

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
