"""Local HTTP session API: the playground's backend.

Sessions hold a live DefenderSession; every attack response is re-checked
server-side (legal guards move, dominating, attacked vertex occupied)
before it is returned.  State is in-memory only.
"""

from __future__ import annotations

import itertools
import threading
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .graph import Graph, GraphError, NotApplicableError, parse_graph
from .oracle import Budget, BudgetExceededError, guards_move_reachable, is_dominating


def _graph_from_body(obj):
    if not isinstance(obj, dict):
        raise GraphError("graph must be a JSON object")
    import json

    return parse_graph(json.dumps(obj))


def create_app(budget_limit=None):
    from .cli import PARAMS, analyze_graph
    from .strategy import DefenderSession, strategy_from_json

    app = FastAPI(title="domguard session API")
    sessions = {}
    ids = itertools.count(1)
    registry_lock = threading.Lock()

    def err(status, message):
        return JSONResponse({"error": message}, status_code=status)

    @app.post("/api/session")
    async def create_session(request: Request):
        try:
            body = await request.json()
        except Exception:
            return err(400, "request body is not JSON")
        try:
            g = _graph_from_body(body.get("graph"))
        except GraphError as e:
            return err(400, str(e))
        mode = body.get("mode", "oracle")
        k = body.get("k")
        try:
            if mode == "strategy":
                if "strategy" not in body:
                    return err(400, "strategy mode needs a strategy object")
                strat = strategy_from_json(g, body["strategy"])
                sess = DefenderSession(g, strategy=strat)
            elif mode == "oracle":
                if not isinstance(k, int) or k < 1:
                    return err(400, "k must be a positive integer")
                sess = DefenderSession(g, k=k, budget=Budget(budget_limit)
                                       if budget_limit else None)
            else:
                return err(400, f"unknown mode {mode!r}")
        except NotApplicableError as e:
            return err(409, str(e))
        except (GraphError, ValueError) as e:
            return err(400, str(e))
        except BudgetExceededError as e:
            return err(409, f"budget exceeded: {e}")
        with registry_lock:
            sid = str(next(ids))
            sessions[sid] = (sess, threading.Lock())
        return JSONResponse({"id": sid, "k": sess.k, "mode": sess.mode,
                             "config": sorted(sess.config)}, status_code=201)

    @app.get("/api/session/{sid}")
    async def get_session(sid: str):
        entry = sessions.get(sid)
        if entry is None:
            return err(404, "no such session")
        sess, lock = entry
        with lock:
            return {"id": sid, "k": sess.k, "mode": sess.mode,
                    "config": sorted(sess.config),
                    "history": [{"vertex": r, "moves": [list(m) for m in mv]}
                                for r, mv in sess.history]}

    @app.delete("/api/session/{sid}")
    async def delete_session(sid: str):
        with registry_lock:
            entry = sessions.pop(sid, None)
        if entry is None:
            return err(404, "no such session")
        return {"deleted": sid}

    @app.post("/api/session/{sid}/attack")
    async def attack(sid: str, request: Request):
        entry = sessions.get(sid)
        if entry is None:
            return err(404, "no such session")
        sess, lock = entry
        try:
            body = await request.json()
        except Exception:
            return err(400, "request body is not JSON")
        vertex = body.get("vertex")
        if not isinstance(vertex, int):
            return err(400, "vertex must be an integer")
        with lock:
            before = frozenset(sess.config)
            try:
                moves = sess.attack(vertex)
            except ValueError as e:
                return err(400, str(e))
            except NotApplicableError as e:
                return err(409, str(e))
            except BudgetExceededError as e:
                return err(409, f"budget exceeded: {e}")
            after = frozenset(sess.config)
            # independent server-side re-check before replying
            if (vertex not in after or not is_dominating(sess.g, after)
                    or not guards_move_reachable(sess.g, before, after)):
                sess.config = before
                sess.history.pop()
                return err(500, "defense produced an illegal configuration")
            return {"moves": [list(m) for m in moves],
                    "config": sorted(after)}

    @app.post("/api/analyze")
    async def analyze(request: Request):
        try:
            body = await request.json()
        except Exception:
            return err(400, "request body is not JSON")
        try:
            g = _graph_from_body(body.get("graph"))
        except GraphError as e:
            return err(400, str(e))
        params = body.get("params", ["medn"])
        if (not isinstance(params, list)
                or any(p not in PARAMS for p in params)):
            return err(400, f"params must be a list from {PARAMS}")
        try:
            report = analyze_graph(g, params,
                                   budget=Budget(budget_limit) if budget_limit
                                   else None)
        except NotApplicableError as e:
            return err(409, str(e))
        return report

    dist = Path(__file__).resolve().parents[2] / "frontend" / "dist"
    if dist.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=str(dist), html=True),
                  name="playground")
    return app


app = create_app()
