"""Stateful HTTP/JSON session service for dissection play and Monty Hall.

In-memory sessions with an optional JSON snapshot file; every mutating
endpoint accepts an optional client-supplied idempotency token ("token" in
the body) so retries replay the stored response instead of double-applying.
Stateless lab computations are exposed as cacheable GET endpoints.

Error bodies are always {"error": <code>, "detail": <text>} plus
"legal_cuts" on illegal-cut rejections. Client mistakes map to 400, unknown
sessions to 404, rule violations to 409, finished sessions to 410, and cap
overruns to 422.
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from fastapi import Body, FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import combinatorics, probability
from .catalog import catalog_names, shape_by_name
from .config import DEFAULT_CAPS
from .dissection import (
    CutModel,
    CutSegment,
    DissectionState,
    apply_cut,
    hint,
    initial_state,
    is_finished,
    min_cut_count,
)
from .errors import CapExceeded, IllegalCut, PuzzleError, WrongModel
from .polyomino import Cell, Polyomino, from_cells, parse_json_dict
from .rng import SplitMix64, derive

_CACHEABLE = "public, max-age=3600"


@dataclass(frozen=True)
class ServiceConfig:
    port: int = 8080
    snapshot_path: str | None = None
    seed: int = 20260816
    cap_n: int | None = None

    @classmethod
    def from_env(cls) -> "ServiceConfig":
        return cls(
            port=int(os.environ.get("PORT", "8080")),
            snapshot_path=os.environ.get("SNAPSHOT_PATH") or None,
            seed=int(os.environ.get("SEED", "20260816")),
            cap_n=int(os.environ["CAP_N"]) if "CAP_N" in os.environ else None,
        )


_MODEL_CAPS = {
    CutModel.SINGLE_SPLIT: DEFAULT_CAPS.per_piece_search,
    CutModel.FULL_LINE: DEFAULT_CAPS.per_piece_search,
    CutModel.GLOBAL_LINE: DEFAULT_CAPS.global_search,
}


class ApiError(Exception):
    """Carries an HTTP status plus the wire error body."""

    def __init__(self, status: int, code: str, detail: str, extra: dict | None = None):
        super().__init__(detail)
        self.status = status
        self.code = code
        self.detail = detail
        self.extra = extra or {}

    def body(self) -> dict:
        return {"error": self.code, "detail": self.detail, **self.extra}


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass
class DissectionSession:
    id: str
    origin: Polyomino
    state: DissectionState
    optimal_total: int
    created_at: str
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def view(self, cap: int) -> dict:
        remaining = hint(self.state, cap)
        cut_count = len(self.state.history)
        finished = is_finished(self.state)
        return {
            "id": self.id,
            "model": self.state.model.value,
            "pieces": {
                pid: [[c.x, c.y] for c in sorted(self.state.pieces[pid])]
                for pid in self.state.piece_ids()
            },
            "cut_count": cut_count,
            "hint": remaining,
            "optimal_total": self.optimal_total,
            "finished": finished,
            "score_note": _score_note(cut_count, remaining, self.optimal_total),
            "created_at": self.created_at,
            "history": [c.to_wire() for c in self.state.history],
        }


def _score_note(cut_count: int, remaining: int, optimal_total: int) -> str:
    delta = cut_count + remaining - optimal_total
    if delta == 0:
        return f"on optimal track: {cut_count} used + {remaining} remaining = {optimal_total}"
    return f"{delta} over optimal: {cut_count} used + {remaining} remaining vs {optimal_total}"


_PHASES = ("AWAIT_PICK", "AWAIT_DECISION", "RESOLVED")


@dataclass
class MontySession:
    id: str
    seed: int
    phase: str = "AWAIT_PICK"
    picked: int | None = None
    revealed: int | None = None
    strategy: str | None = None
    won: bool | None = None
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @property
    def car_door(self) -> int:
        return SplitMix64(self.seed).randrange(3) + 1

    def reveal_door(self) -> int:
        """Host's goat door: uniform among legal, derived from the seed."""
        rng = SplitMix64(self.seed)
        rng.randrange(3)
        goats = [d for d in (1, 2, 3) if d != self.picked and d != self.car_door]
        return goats[rng.randrange(len(goats))]

    def view(self) -> dict:
        body = {
            "id": self.id,
            "phase": self.phase,
            "picked": self.picked,
            "revealed": self.revealed,
            "strategy": self.strategy,
            "won": self.won,
        }
        if self.phase == "RESOLVED":
            body["car_door"] = self.car_door
        return body


class SessionStore:
    """All live sessions plus idempotency-token replay and snapshotting."""

    def __init__(self, config: ServiceConfig):
        self.config = config
        self.dissections: dict[str, DissectionSession] = {}
        self.montys: dict[str, MontySession] = {}
        self.tokens: dict[str, tuple[str, int, dict]] = {}
        self.next_dissection = 1
        self.next_monty = 1
        self.lock = threading.Lock()
        if config.snapshot_path and Path(config.snapshot_path).exists():
            self.load(config.snapshot_path)

    def effective_cap(self, model: CutModel) -> int:
        if self.config.cap_n is not None:
            return self.config.cap_n
        return _MODEL_CAPS[model]

    # -- idempotency ---------------------------------------------------------

    def replay_token(self, token: str | None, body: dict) -> dict | None:
        if token is None:
            return None
        fingerprint = json.dumps(body, sort_keys=True)
        with self.lock:
            hit = self.tokens.get(token)
        if hit is None:
            return None
        stored_fp, status, response = hit
        if stored_fp != fingerprint:
            raise ApiError(409, "token_conflict", "token reused with a different body")
        if status >= 400:
            raise ApiError(status, response.get("error", "error"), response.get("detail", ""),
                           {k: v for k, v in response.items() if k not in ("error", "detail")})
        return response

    def remember_token(self, token: str | None, body: dict, status: int, response: dict) -> None:
        if token is None:
            return
        fingerprint = json.dumps(body, sort_keys=True)
        with self.lock:
            self.tokens[token] = (fingerprint, status, response)
        self.snapshot()

    # -- session creation ------------------------------------------------------

    def new_dissection(self, p: Polyomino, model: CutModel) -> DissectionSession:
        cap = self.effective_cap(model)
        if p.n > cap:
            raise CapExceeded(f"n={p.n} exceeds the session cap {cap}")
        optimal = min_cut_count(p, model, cap)
        with self.lock:
            sid = f"d{self.next_dissection}"
            self.next_dissection += 1
            session = DissectionSession(
                id=sid,
                origin=p,
                state=initial_state(p, model),
                optimal_total=optimal,
                created_at=_now(),
            )
            self.dissections[sid] = session
        self.snapshot()
        return session

    def new_monty(self, seed: int | None) -> MontySession:
        with self.lock:
            sid = f"m{self.next_monty}"
            index = self.next_monty
            self.next_monty += 1
            session = MontySession(
                id=sid,
                seed=seed if seed is not None else derive(self.config.seed, index),
            )
            self.montys[sid] = session
        self.snapshot()
        return session

    def dissection(self, sid: str) -> DissectionSession:
        session = self.dissections.get(sid)
        if session is None:
            raise ApiError(404, "not_found", f"no dissection session {sid!r}")
        return session

    def monty(self, sid: str) -> MontySession:
        session = self.montys.get(sid)
        if session is None:
            raise ApiError(404, "not_found", f"no monty session {sid!r}")
        return session

    # -- snapshot ----------------------------------------------------------------

    def snapshot(self) -> None:
        if not self.config.snapshot_path:
            return
        with self.lock:
            payload = {
                "dissections": [
                    {
                        "id": s.id,
                        "model": s.state.model.value,
                        "cells": [[c.x, c.y] for c in s.origin.sorted_cells()],
                        "history": [c.to_wire() for c in s.state.history],
                        "created_at": s.created_at,
                    }
                    for s in self.dissections.values()
                ],
                "montys": [
                    {
                        "id": s.id,
                        "seed": s.seed,
                        "phase": s.phase,
                        "picked": s.picked,
                        "revealed": s.revealed,
                        "strategy": s.strategy,
                        "won": s.won,
                    }
                    for s in self.montys.values()
                ],
                "counters": {
                    "next_dissection": self.next_dissection,
                    "next_monty": self.next_monty,
                },
                "tokens": {
                    tok: {"fingerprint": fp, "status": status, "response": resp}
                    for tok, (fp, status, resp) in self.tokens.items()
                },
            }
            tmp = self.config.snapshot_path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                json.dump(payload, fh)
            os.replace(tmp, self.config.snapshot_path)

    def load(self, path: str) -> None:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
        for entry in payload.get("dissections", []):
            p = from_cells(Cell(x, y) for x, y in entry["cells"])
            model = CutModel(entry["model"])
            state = initial_state(p, model)
            for wire in entry["history"]:
                state = apply_cut(state, CutSegment.from_wire(wire))
            self.dissections[entry["id"]] = DissectionSession(
                id=entry["id"],
                origin=p,
                state=state,
                optimal_total=min_cut_count(p, model, self.effective_cap(model)),
                created_at=entry["created_at"],
            )
        for entry in payload.get("montys", []):
            self.montys[entry["id"]] = MontySession(
                id=entry["id"],
                seed=entry["seed"],
                phase=entry["phase"],
                picked=entry["picked"],
                revealed=entry["revealed"],
                strategy=entry["strategy"],
                won=entry["won"],
            )
        counters = payload.get("counters", {})
        self.next_dissection = counters.get("next_dissection", len(self.dissections) + 1)
        self.next_monty = counters.get("next_monty", len(self.montys) + 1)
        for tok, entry in payload.get("tokens", {}).items():
            self.tokens[tok] = (entry["fingerprint"], entry["status"], entry["response"])


# --- request parsing helpers ---------------------------------------------------


def _parse_model(raw: object) -> CutModel:
    if not isinstance(raw, str):
        raise ApiError(400, "bad_request", "model must be a string")
    name = raw.upper().replace("-", "_")
    try:
        return CutModel(name)
    except ValueError:
        raise ApiError(
            400, "bad_request",
            f"unknown model {raw!r}; one of single-split, full-line, global-line",
        ) from None


def _parse_shape(body: dict) -> Polyomino:
    if "shape" in body:
        try:
            return shape_by_name(str(body["shape"]))
        except PuzzleError as exc:
            raise ApiError(400, "bad_request", str(exc)) from exc
    if "cells" in body:
        try:
            return parse_json_dict({"cells": body["cells"]})
        except CapExceeded:
            raise
        except PuzzleError as exc:
            raise ApiError(400, "bad_request", str(exc)) from exc
    raise ApiError(400, "bad_request", "body needs either 'shape' or 'cells'")


def _parse_door(raw: object) -> int:
    if not isinstance(raw, int) or isinstance(raw, bool) or not 1 <= raw <= 3:
        raise ApiError(400, "bad_request", f"door must be 1, 2, or 3, got {raw!r}")
    return raw


def _parse_strategy(raw: object) -> probability.Strategy:
    try:
        return probability.Strategy(str(raw).upper())
    except ValueError:
        raise ApiError(400, "bad_request", f"strategy must be SWITCH or STAY, got {raw!r}") from None


def _token(body: dict) -> str | None:
    token = body.get("token")
    if token is None:
        return None
    if not isinstance(token, str) or not token:
        raise ApiError(400, "bad_request", "token must be a non-empty string")
    return token


# --- app factory -----------------------------------------------------------------


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig.from_env()
    app = FastAPI(title="puzzlebench", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(config)
    app.state.store = store

    @app.exception_handler(ApiError)
    async def on_api_error(_: Request, exc: ApiError) -> JSONResponse:
        return JSONResponse(status_code=exc.status, content=exc.body())

    @app.exception_handler(CapExceeded)
    async def on_cap(_: Request, exc: CapExceeded) -> JSONResponse:
        return JSONResponse(status_code=422, content={"error": "cap_exceeded", "detail": str(exc)})

    @app.exception_handler(IllegalCut)
    async def on_illegal(_: Request, exc: IllegalCut) -> JSONResponse:
        return JSONResponse(
            status_code=409,
            content={
                "error": "illegal_cut",
                "detail": str(exc),
                "legal_cuts": [c.to_wire() for c in exc.legal_cuts],
            },
        )

    @app.exception_handler(WrongModel)
    async def on_wrong_model(_: Request, exc: WrongModel) -> JSONResponse:
        return JSONResponse(status_code=409, content={"error": "wrong_model", "detail": str(exc)})

    @app.exception_handler(PuzzleError)
    async def on_domain_error(_: Request, exc: PuzzleError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": "bad_request", "detail": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def on_validation(_: Request, exc: RequestValidationError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": "bad_request", "detail": str(exc)})

    # -- dissection sessions --------------------------------------------------

    @app.post("/api/dissection", status_code=201)
    def create_dissection(body: dict = Body(...)) -> JSONResponse:
        token = _token(body)
        replayed = store.replay_token(token, body)
        if replayed is not None:
            return JSONResponse(status_code=201, content=replayed)
        p = _parse_shape(body)
        model = _parse_model(body.get("model", "SINGLE_SPLIT"))
        session = store.new_dissection(p, model)
        view = session.view(store.effective_cap(model))
        store.remember_token(token, body, 201, view)
        return JSONResponse(status_code=201, content=view)

    @app.get("/api/dissection/{sid}")
    def get_dissection(sid: str) -> dict:
        session = store.dissection(sid)
        with session.lock:
            return session.view(store.effective_cap(session.state.model))

    @app.post("/api/dissection/{sid}/cut")
    def post_cut(sid: str, body: dict = Body(...)) -> dict:
        token = _token(body)
        replayed = store.replay_token(token, body)
        if replayed is not None:
            return replayed
        session = store.dissection(sid)
        with session.lock:
            if is_finished(session.state):
                raise ApiError(410, "finished", "session is already fully dissected")
            try:
                cut = CutSegment.from_wire(body.get("cut", body))
            except PuzzleError as exc:
                raise ApiError(400, "bad_request", str(exc)) from exc
            session.state = apply_cut(session.state, cut)
            view = session.view(store.effective_cap(session.state.model))
        store.remember_token(token, body, 200, view)
        store.snapshot()
        return view

    @app.get("/api/dissection/{sid}/hint")
    def get_hint(sid: str) -> dict:
        session = store.dissection(sid)
        with session.lock:
            remaining = hint(session.state, store.effective_cap(session.state.model))
        return {"id": sid, "hint": remaining}

    # -- monty sessions ---------------------------------------------------------

    @app.post("/api/monty", status_code=201)
    def create_monty(body: dict = Body(default={})) -> JSONResponse:
        token = _token(body)
        replayed = store.replay_token(token, body)
        if replayed is not None:
            return JSONResponse(status_code=201, content=replayed)
        seed = body.get("seed")
        if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
            raise ApiError(400, "bad_request", "seed must be an integer")
        session = store.new_monty(seed)
        view = session.view()
        store.remember_token(token, body, 201, view)
        return JSONResponse(status_code=201, content=view)

    @app.get("/api/monty/stats")
    def monty_stats() -> dict:
        stats = {s.value: {"games": 0, "wins": 0} for s in probability.Strategy}
        for session in list(store.montys.values()):
            if session.phase == "RESOLVED" and session.strategy is not None:
                entry = stats[session.strategy]
                entry["games"] += 1
                entry["wins"] += int(session.won)
        return {
            strategy: {
                "games": entry["games"],
                "wins": entry["wins"],
                "rate": entry["wins"] / entry["games"] if entry["games"] else None,
            }
            for strategy, entry in stats.items()
        }

    @app.post("/api/monty/{sid}/pick")
    def monty_pick(sid: str, body: dict = Body(...)) -> dict:
        token = _token(body)
        replayed = store.replay_token(token, body)
        if replayed is not None:
            return replayed
        session = store.monty(sid)
        with session.lock:
            if session.phase != "AWAIT_PICK":
                raise ApiError(409, "out_of_phase", f"pick not allowed in phase {session.phase}")
            session.picked = _parse_door(body.get("door"))
            session.revealed = session.reveal_door()
            session.phase = "AWAIT_DECISION"
            view = session.view()
        store.remember_token(token, body, 200, view)
        store.snapshot()
        return view

    @app.post("/api/monty/{sid}/decide")
    def monty_decide(sid: str, body: dict = Body(...)) -> dict:
        token = _token(body)
        replayed = store.replay_token(token, body)
        if replayed is not None:
            return replayed
        session = store.monty(sid)
        with session.lock:
            if session.phase != "AWAIT_DECISION":
                raise ApiError(409, "out_of_phase", f"decide not allowed in phase {session.phase}")
            strategy = _parse_strategy(body.get("strategy"))
            final = session.picked
            if strategy is probability.Strategy.SWITCH:
                final = next(
                    d for d in (1, 2, 3) if d != session.picked and d != session.revealed
                )
            session.strategy = strategy.value
            session.won = final == session.car_door
            session.phase = "RESOLVED"
            view = session.view()
            view["final_door"] = final
        store.remember_token(token, body, 200, view)
        store.snapshot()
        return view

    @app.get("/api/monty/{sid}")
    def get_monty(sid: str) -> dict:
        session = store.monty(sid)
        with session.lock:
            return session.view()

    # -- stateless computations ---------------------------------------------------

    @app.get("/api/birthday")
    def api_birthday(
        response: Response,
        n: int | None = None,
        formula: str = "exact",
        threshold: float | None = None,
    ) -> dict:
        response.headers["Cache-Control"] = _CACHEABLE
        try:
            form = probability.BirthdayFormula(formula.upper())
        except ValueError:
            raise ApiError(400, "bad_request", f"formula must be exact or approx, got {formula!r}") from None
        if threshold is not None:
            return {
                "formula": form.value,
                "threshold": threshold,
                "n": probability.birthday_threshold(threshold, form),
            }
        if n is None:
            raise ApiError(400, "bad_request", "pass n= or threshold=")
        fn = (
            probability.birthday_exact
            if form is probability.BirthdayFormula.EXACT
            else probability.birthday_approx
        )
        return {"n": n, "formula": form.value, "probability": fn(n)}

    @app.get("/api/hanoi")
    def api_hanoi(response: Response, n: int) -> dict:
        response.headers["Cache-Control"] = _CACHEABLE
        moves, count = combinatorics.hanoi(n)
        return {"n": n, "count": count, "moves": [[m.from_rod, m.to_rod] for m in moves]}

    @app.get("/api/queens")
    def api_queens(response: Response, n: int) -> dict:
        response.headers["Cache-Control"] = _CACHEABLE
        count, solutions = combinatorics.queens(n)
        return {
            "n": n,
            "count": count,
            "solutions": [[list(sq) for sq in s.squares] for s in solutions],
        }

    @app.get("/api/knight")
    def api_knight(response: Response, rows: int, cols: int, start: str = "0,0") -> dict:
        response.headers["Cache-Control"] = _CACHEABLE
        try:
            r, c = (int(part) for part in start.split(","))
        except ValueError:
            raise ApiError(400, "bad_request", f"start must be 'row,col', got {start!r}") from None
        tour = combinatorics.knight_tour(rows, cols, (r, c))
        if tour is None:
            return {"rows": rows, "cols": cols, "start": [r, c], "found": False, "path": None}
        return {
            "rows": rows,
            "cols": cols,
            "start": [r, c],
            "found": True,
            "path": [list(sq) for sq in tour.path],
        }

    @app.get("/api/domination")
    def api_domination(response: Response, n: int) -> dict:
        response.headers["Cache-Control"] = _CACHEABLE
        k, placement = combinatorics.queens_domination(n)
        return {"n": n, "k": k, "placement": [list(sq) for sq in placement.squares]}

    @app.get("/api/catalog")
    def api_catalog(response: Response) -> dict:
        response.headers["Cache-Control"] = _CACHEABLE
        shapes = []
        for name in catalog_names():
            p = shape_by_name(name)
            shapes.append({"name": name, "cells": [[c.x, c.y] for c in p.sorted_cells()]})
        return {"shapes": shapes}

    return app


app = create_app()


def serve(config: ServiceConfig | None = None) -> None:
    """Run the service under uvicorn (blocking)."""
    import uvicorn

    config = config or ServiceConfig.from_env()
    uvicorn.run(create_app(config), host="0.0.0.0", port=config.port)
