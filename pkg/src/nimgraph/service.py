"""HTTP API hosting game sessions for the web UI.

Sessions live in memory behind a small LRU; requests touching the same
session are serialized by a per-session lock so the move history stays
linear.
"""

from __future__ import annotations

import threading
import uuid
from collections import OrderedDict
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .graph import (
    GameGraph,
    GameState,
    IllegalMoveError,
    InstanceError,
    Move,
    apply_move,
    generate,
    is_terminal,
    legal_moves,
    parse_instance,
)
from .solver import DEFAULT_BUDGET, BudgetExceededError, Solver
from .strategies import Prediction, dispatch
from .structures import detect

MAX_SESSIONS = 256


@dataclass
class GameSession:
    id: str
    graph: GameGraph
    state: GameState
    engine: str
    history: list[Move] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


class FamilySpec(BaseModel):
    family: str
    n: int | None = None
    j: int | None = None
    weights: str = "uniform:1"
    seed: int | None = None
    start: int = 0


class CreateGameRequest(BaseModel):
    instance: str | None = None
    family: FamilySpec | None = None
    engine: str = "oracle"


class MoveRequest(BaseModel):
    to: int
    new_weight: int


def _replay_consistent(session: GameSession) -> bool:
    state = session.graph.initial_state()
    for move in session.history:
        state = apply_move(state, session.graph, move)
    return state == session.state


def _state_summary(session: GameSession) -> dict:
    graph, state = session.graph, session.state
    terminal = is_terminal(state, graph)
    return {
        "id": session.id,
        "engine": session.engine,
        "vertices": graph.vertex_count,
        "start": graph.start_vertex,
        "edges": [
            {"u": u, "v": v, "w": state.weights[i], "initial": w0}
            for i, (u, v, w0) in enumerate(graph.edges)
        ],
        "token": state.token,
        "legal_moves": [
            {"to": m.to, "new_weight": m.new_weight}
            for m in legal_moves(state, graph)
        ],
        "terminal": terminal,
        # the player to move loses; players are 1/2 by history parity
        "loser": (len(session.history) % 2) + 1 if terminal else None,
        "move_count": len(session.history),
    }


def create_app(static_dir: str | None = None, budget: int = DEFAULT_BUDGET) -> FastAPI:
    app = FastAPI(title="nimgraph service")
    sessions: OrderedDict[str, GameSession] = OrderedDict()
    registry_lock = threading.Lock()

    def get_session(game_id: str) -> GameSession:
        with registry_lock:
            session = sessions.get(game_id)
            if session is None:
                raise HTTPException(status_code=404, detail="unknown session")
            sessions.move_to_end(game_id)
            return session

    @app.post("/api/games")
    def create_game(req: CreateGameRequest) -> dict:
        if (req.instance is None) == (req.family is None):
            raise HTTPException(400, "provide exactly one of instance, family")
        if req.engine not in ("oracle", "strategy"):
            raise HTTPException(400, "engine must be 'oracle' or 'strategy'")
        try:
            if req.instance is not None:
                graph = parse_instance(req.instance)
            else:
                from .cli import parse_weight_spec

                spec = req.family
                graph = generate(
                    spec.family, n=spec.n, j=spec.j,
                    weights=parse_weight_spec(spec.weights),
                    seed=spec.seed, start=spec.start,
                )
        except InstanceError as exc:
            raise HTTPException(400, str(exc))
        session = GameSession(
            id=uuid.uuid4().hex, graph=graph, state=graph.initial_state(),
            engine=req.engine,
        )
        with registry_lock:
            sessions[session.id] = session
            while len(sessions) > MAX_SESSIONS:
                sessions.popitem(last=False)
        return _state_summary(session)

    @app.get("/api/games/{game_id}")
    def get_game(game_id: str) -> dict:
        session = get_session(game_id)
        with session.lock:
            assert _replay_consistent(session)
            return _state_summary(session)

    @app.post("/api/games/{game_id}/moves")
    def submit_move(game_id: str, req: MoveRequest) -> dict:
        session = get_session(game_id)
        with session.lock:
            move = Move(req.to, req.new_weight)
            try:
                session.state = apply_move(session.state, session.graph, move)
            except IllegalMoveError as exc:
                raise HTTPException(409, str(exc))
            session.history.append(move)
            return _state_summary(session)

    @app.post("/api/games/{game_id}/engine-move")
    def engine_move(game_id: str) -> dict:
        session = get_session(game_id)
        with session.lock:
            if is_terminal(session.state, session.graph):
                raise HTTPException(409, "game is over")
            move = None
            name = "oracle"
            if session.engine == "strategy":
                name, _, move = dispatch(session.state, session.graph)
            if move is None:
                name = "oracle"
                try:
                    analysis = Solver(session.graph, max_states=budget).analyze(session.state)
                except BudgetExceededError as exc:
                    raise HTTPException(503, f"oracle budget exceeded: {exc}")
                if analysis.optimal_moves:
                    move = analysis.optimal_moves[0]
                else:
                    move = legal_moves(session.state, session.graph)[0]
            session.state = apply_move(session.state, session.graph, move)
            session.history.append(move)
            summary = _state_summary(session)
            summary["engine_move"] = {"to": move.to, "new_weight": move.new_weight}
            summary["strategy"] = name
            return summary

    @app.get("/api/games/{game_id}/analysis")
    def analysis(game_id: str) -> dict:
        session = get_session(game_id)
        with session.lock:
            assert _replay_consistent(session)
            state, graph = session.state, session.graph
            tags = [str(t) for t in detect(state, graph)]
            name, prediction, _ = dispatch(state, graph)
            body = {
                "tags": tags,
                "strategy": name,
                "prediction": prediction.value,
                "oracle_unavailable": False,
            }
            try:
                result = Solver(graph, max_states=budget).analyze(state)
            except BudgetExceededError:
                body["oracle_unavailable"] = True
                return body
            body.update(
                winner=result.winner.value,
                grundy=result.grundy,
                optimal_moves=[
                    {"to": m.to, "new_weight": m.new_weight}
                    for m in result.optimal_moves
                ],
                states_visited=result.states_visited,
            )
            return body

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
