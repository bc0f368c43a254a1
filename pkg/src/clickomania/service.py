"""JSON-over-HTTP service around the engine, solvers, and generators.

Sessions live in a dict guarded by one registry lock; each session's
history stack is mutated under its own lock so concurrent clicks on the
same board serialize while solver calls, which are pure, run freely.
With a persist directory every mutation snapshots the session to one
JSON file, and the registry is reloaded from there on startup.
"""

from __future__ import annotations

import json
import os
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .engine import (
    Board,
    BoardParseError,
    IllegalMoveError,
    click,
    find_groups,
    legal_moves,
    parse_board,
    remaining_blocks,
    render_board,
)
from .cli import auto_decide
from .oracle import Budget, search
from .partition_gen import PartitionInstance, partition_board
from .sat_gen import CnfFormula, SatGenParams, parse_dimacs, sat_board
from .words import word_from_board

DEFAULT_HINT_MS = 1000


@dataclass
class SessionState:
    """One undo stack; the top of history is the current board."""

    id: str
    history: list[Board]
    created: float
    updated: float
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def board(self) -> Board:
        return self.history[-1]


class BoardText(BaseModel):
    text: str


class ClickRequest(BaseModel):
    cell: tuple[int, int]


class HintRequest(BaseModel):
    budget_ms: Optional[int] = None


class PartitionRequest(BaseModel):
    target: int
    elements: list[int]


class SatRequest(BaseModel):
    dimacs: Optional[str] = None
    num_vars: Optional[int] = None
    clauses: Optional[list[list[int]]] = None
    h0: Optional[int] = None
    locks: Optional[list[int]] = None


def _view(session: SessionState) -> dict:
    board = session.board
    groups = [
        {
            "color": g.color,
            "representative": list(g.representative),
            "cells": sorted([c, r] for c, r in g.cells),
        }
        for g in find_groups(board)
    ]
    return {
        "id": session.id,
        "width": board.width,
        "height": board.height,
        "remaining": remaining_blocks(board),
        "rows": render_board(board).splitlines(),
        "groups": groups,
        "legal_moves": sorted([c, r] for c, r in (m.cell for m in legal_moves(board))),
        "history_depth": len(session.history),
        "solved": board.is_empty,
    }


def _hint_budget(budget_ms: Optional[int]) -> Budget:
    if budget_ms is None:
        budget_ms = int(os.environ.get("CLICKOMANIA_BUDGET_MS", DEFAULT_HINT_MS))
    return Budget(max_time=budget_ms / 1000.0)


def build_app(
    persist_dir: Optional[Path] = None,
    ui_dir: Optional[Path] = None,
) -> FastAPI:
    app = FastAPI(title="clickomania")
    sessions: dict[str, SessionState] = {}
    registry_lock = threading.Lock()

    def save(session: SessionState) -> None:
        if persist_dir is None:
            return
        persist_dir.mkdir(parents=True, exist_ok=True)
        snapshot = {
            "id": session.id,
            "history": [render_board(b) for b in session.history],
            "created": session.created,
            "updated": session.updated,
        }
        (persist_dir / f"{session.id}.json").write_text(json.dumps(snapshot))

    if persist_dir is not None and persist_dir.is_dir():
        for path in sorted(persist_dir.glob("*.json")):
            data = json.loads(path.read_text())
            sessions[data["id"]] = SessionState(
                id=data["id"],
                history=[parse_board(text) for text in data["history"]],
                created=data["created"],
                updated=data["updated"],
            )

    def new_session(board: Board) -> SessionState:
        now = time.time()
        session = SessionState(uuid.uuid4().hex, [board], now, now)
        with registry_lock:
            sessions[session.id] = session
        save(session)
        return session

    def get_session(board_id: str) -> SessionState:
        with registry_lock:
            session = sessions.get(board_id)
        if session is None:
            raise HTTPException(404, f"no session {board_id}")
        return session

    @app.post("/boards")
    def create_board(body: BoardText) -> dict:
        try:
            board = parse_board(body.text)
        except BoardParseError as exc:
            raise HTTPException(400, str(exc))
        return _view(new_session(board))

    @app.get("/boards/{board_id}")
    def get_board(board_id: str) -> dict:
        return _view(get_session(board_id))

    @app.post("/boards/{board_id}/click")
    def click_board(board_id: str, body: ClickRequest) -> dict:
        session = get_session(board_id)
        with session.lock:
            try:
                session.history.append(click(session.board, tuple(body.cell)))
            except IllegalMoveError as exc:
                raise HTTPException(409, str(exc))
            session.updated = time.time()
            save(session)
            return _view(session)

    @app.post("/boards/{board_id}/undo")
    def undo_board(board_id: str) -> dict:
        session = get_session(board_id)
        with session.lock:
            if len(session.history) == 1:
                raise HTTPException(409, "nothing to undo")
            session.history.pop()
            session.updated = time.time()
            save(session)
            return _view(session)

    @app.post("/boards/{board_id}/hint")
    def hint_board(board_id: str, body: Optional[HintRequest] = None) -> dict:
        session = get_session(board_id)
        with session.lock:
            board = session.board
        budget_ms = body.budget_ms if body is not None else None
        result = search(board, _hint_budget(budget_ms))
        move = list(result.witness.moves[0].cell) if len(result.witness) else None
        return {
            "move": move,
            "projected": result.max_removed,
            "exact": result.exact,
        }

    @app.get("/boards/{board_id}/solvability")
    def board_solvability(board_id: str) -> dict:
        session = get_session(board_id)
        with session.lock:
            board = session.board
        word = orientation = None
        if board.is_empty or board.width == 1:
            word, orientation = (word_from_board(board), "column")
        elif board.height == 1:
            word, orientation = (word_from_board(board), "row")
        out = auto_decide(board, word, orientation or "", budget=_hint_budget(None))
        out.pop("witness", None)
        return out

    @app.post("/generate/3partition")
    def generate_partition(body: PartitionRequest) -> dict:
        try:
            instance = PartitionInstance(body.target, tuple(body.elements))
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        view = _view(new_session(partition_board(instance)))
        view["generator"] = {
            "kind": "3partition",
            "target": instance.target,
            "elements": list(instance.elements),
        }
        return view

    @app.post("/generate/3sat")
    def generate_sat(body: SatRequest) -> dict:
        try:
            if body.dimacs is not None:
                formula = parse_dimacs(body.dimacs)
            elif body.num_vars is not None and body.clauses is not None:
                formula = CnfFormula(
                    body.num_vars, tuple(tuple(c) for c in body.clauses)
                )
            else:
                raise ValueError("need either dimacs text or num_vars with clauses")
            locks = tuple(body.locks) if body.locks else None
            params = SatGenParams.defaults(formula, h0=body.h0, locks=locks)
        except ValueError as exc:
            raise HTTPException(400, str(exc))
        view = _view(new_session(sat_board(formula, params)))
        view["generator"] = {
            "kind": "3sat",
            "num_vars": formula.num_vars,
            "clauses": [list(c) for c in formula.clauses],
            "h0": params.h0,
            "locks": list(params.locks),
        }
        return view

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    return app
