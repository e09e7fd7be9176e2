"""HTTP play server: game sessions against the engine plus stateless
solver endpoints. Sessions live in memory; the durable record is the
transcript, one JSON line per move, flushed immediately.

All JSON in and out is UTF-8. Errors: 400 invalid start state, 404 unknown
session, 409 out-of-turn request, 422 illegal move (the violated rule is
named in the payload).
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import core, solver, tables
from .core import Classification, Move

HUMAN = "human"
ENGINE = "engine"

ONGOING = "ongoing"
HUMAN_WON = "human_won"
ENGINE_WON = "engine_won"


@dataclass
class HistoryEntry:
    mover: str
    move: Move
    state_after: core.RawState
    classification_after: Classification


@dataclass
class GameSession:
    """One human-vs-engine game. Mutations happen under ``lock`` only."""

    id: str
    state: core.RawState
    to_move: str
    initial_state: core.RawState
    status: str = ONGOING
    history: list[HistoryEntry] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)


class TranscriptLog:
    """Append-only NDJSON move log; pass path=None to discard records."""

    def __init__(self, path: str | None) -> None:
        self.path = Path(path) if path else None
        self._lock = threading.Lock()
        self._fh = None

    def append(self, record: dict) -> None:
        if self.path is None:
            return
        with self._lock:
            if self._fh is None:
                self._fh = self.path.open("a", encoding="utf-8")
            self._fh.write(json.dumps(record) + "\n")
            self._fh.flush()


def engine_move(session: GameSession) -> Move:
    """The engine's choice: the winning move when one exists; from a lost
    position, the least legal move (it never passes)."""
    move = solver.best_move(session.state)
    if move is None:
        move = core.legal_moves(session.state)[0]
    return move


def _record_move(
    session: GameSession, mover: str, move: Move, log: TranscriptLog
) -> None:
    after = core.apply_move(session.state, move)
    session.state = after
    classification = solver.classify(core.canonicalize(after))
    session.history.append(HistoryEntry(mover, move, after, classification))
    log.append(
        {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "session_id": session.id,
            "mover": mover,
            "move": {"heap_index": move.heap_index, "new_size": move.new_size},
            "state_after": list(after),
            "classification_after": classification.value,
        }
    )
    if core.legal_moves(after):
        session.to_move = ENGINE if mover == HUMAN else HUMAN
    else:
        # the mover took the last chip and wins
        session.status = HUMAN_WON if mover == HUMAN else ENGINE_WON


def new_session(
    heaps: list[int], human_first: bool, log: TranscriptLog
) -> GameSession:
    state = core.validate_state(heaps)
    if not core.legal_moves(state):
        raise core.GameError("state has no chips to play")
    session = GameSession(
        id=secrets.token_urlsafe(16),
        state=state,
        to_move=HUMAN if human_first else ENGINE,
        initial_state=state,
    )
    if session.to_move == ENGINE:
        _record_move(session, ENGINE, engine_move(session), log)
    return session


def human_move(session: GameSession, move: Move, log: TranscriptLog) -> None:
    """Apply the human's move and, if the game continues, the engine's
    reply. Caller must hold the session lock and have checked the turn."""
    _record_move(session, HUMAN, move, log)
    if session.status == ONGOING:
        _record_move(session, ENGINE, engine_move(session), log)


def _move_dict(move: Move) -> dict:
    return {"heap_index": move.heap_index, "new_size": move.new_size}


def session_view(session: GameSession) -> dict:
    last = session.history[-1] if session.history else None
    return {
        "id": session.id,
        "state": list(session.state),
        "initial_state": list(session.initial_state),
        "to_move": session.to_move,
        "status": session.status,
        "classification": solver.classify(core.canonicalize(session.state)).value,
        "engine_move": _move_dict(last.move) if last and last.mover == ENGINE else None,
        "history": [
            {
                "mover": entry.mover,
                "move": _move_dict(entry.move),
                "state_after": list(entry.state_after),
                "classification_after": entry.classification_after.value,
            }
            for entry in session.history
        ],
    }


class NewSessionBody(BaseModel):
    heaps: list[int]
    human_first: bool = True


class MoveBody(BaseModel):
    heap_index: int
    new_size: int


def _parse_heaps(raw: str) -> list[int]:
    if raw.strip() == "":
        return []
    try:
        return [int(part) for part in raw.split(",")]
    except ValueError:
        raise HTTPException(400, detail=f"cannot parse heap list: {raw!r}")


def create_app(
    transcript_path: str | None = "./antonim-transcript.ndjson",
    static_dir: str | None = None,
) -> FastAPI:
    app = FastAPI(title="antonim")
    log = TranscriptLog(transcript_path)
    sessions: dict[str, GameSession] = {}
    registry_lock = threading.Lock()
    app.state.transcript = log
    app.state.sessions = sessions

    def get_or_404(session_id: str) -> GameSession:
        session = sessions.get(session_id)
        if session is None:
            raise HTTPException(404, detail="unknown session")
        return session

    @app.post("/api/sessions", status_code=201)
    def create_session(body: NewSessionBody) -> dict:
        try:
            session = new_session(body.heaps, body.human_first, log)
        except core.GameError as exc:
            raise HTTPException(400, detail=str(exc))
        with registry_lock:
            sessions[session.id] = session
        return session_view(session)

    @app.get("/api/sessions/{session_id}")
    def get_session(session_id: str) -> dict:
        session = get_or_404(session_id)
        with session.lock:
            return session_view(session)

    @app.post("/api/sessions/{session_id}/moves")
    def post_move(session_id: str, body: MoveBody) -> dict:
        session = get_or_404(session_id)
        with session.lock:
            if session.status != ONGOING:
                raise HTTPException(409, detail="game is over")
            if session.to_move != HUMAN:
                raise HTTPException(409, detail="not the human's turn")
            try:
                human_move(session, Move(body.heap_index, body.new_size), log)
            except core.IllegalMove as exc:
                raise HTTPException(
                    422,
                    detail={
                        "error": "illegal move",
                        "rule": exc.rule,
                        "message": str(exc),
                    },
                )
            return session_view(session)

    @app.get("/api/classify")
    def classify_endpoint(heaps: str) -> dict:
        values = _parse_heaps(heaps)
        try:
            state = core.validate_state(values)
        except core.GameError as exc:
            raise HTTPException(400, detail=str(exc))
        move = solver.best_move(state)
        return {
            "classification": solver.classify(core.canonicalize(state)).value,
            "best_move": _move_dict(move) if move else None,
        }

    @app.get("/api/complete")
    def complete_endpoint(heaps: str = "") -> dict:
        values = _parse_heaps(heaps)
        try:
            state = core.validate_state(values) if values else ()
        except core.GameError as exc:
            raise HTTPException(400, detail=str(exc))
        return {"z": solver.completion(core.canonicalize(state))}

    @app.get("/api/table")
    def table_endpoint(
        heaps: int = 3,
        max_index: int = Query(12, alias="max"),
        prefix: str = "",
    ) -> dict:
        try:
            spec = tables.PTableSpec(
                n_heaps=heaps,
                layer_prefix=tuple(_parse_heaps(prefix)),
                max_index=max_index,
            )
        except solver.InvalidInput as exc:
            raise HTTPException(400, detail=str(exc))
        table = tables.build_table(spec)
        return {
            "n_heaps": spec.n_heaps,
            "layer_prefix": list(spec.layer_prefix),
            "max_index": spec.max_index,
            "cells": [
                ["X" if cell is None else cell for cell in row]
                for row in table.cells
            ],
        }

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="webui")

    return app
