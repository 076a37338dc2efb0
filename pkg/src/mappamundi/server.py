"""HTTP JSON API over the session engine."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from .errors import MappaError, NotFoundError
from .expansion import Channel
from .projection import emit_svg
from .session import Engine


class UtteranceBody(BaseModel):
    text: str


class ExpandBody(BaseModel):
    node_id: int
    count: int | None = None


class ConfigDelta(BaseModel):
    quotas: dict[str, int] | None = None
    tau_low: float | None = None
    tau_high: float | None = None
    seed: int | None = None
    keyword_limit: int | None = None


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="mappamundi", docs_url=None, redoc_url=None)

    @app.exception_handler(NotFoundError)
    async def not_found(_req: Request, exc: NotFoundError):
        return JSONResponse(
            status_code=404, content={"error": "not_found", "detail": str(exc)}
        )

    @app.exception_handler(MappaError)
    async def engine_error(_req: Request, exc: MappaError):
        return JSONResponse(
            status_code=400,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.post("/sessions")
    def create_session():
        session = engine.create_session()
        return {"id": session.id}

    @app.post("/sessions/{session_id}/utterance")
    def post_utterance(session_id: str, body: UtteranceBody):
        session = engine.get_session(session_id)
        if not body.text.strip():
            return {"new_nodes": [], "scene": session.scene()}
        new_nodes = engine.apply_utterance(session, body.text)
        return {"new_nodes": new_nodes, "scene": session.scene()}

    @app.post("/sessions/{session_id}/expand")
    def post_expand(session_id: str, body: ExpandBody):
        session = engine.get_session(session_id)
        new_nodes = engine.expand_node(session, body.node_id, body.count)
        return {"new_nodes": new_nodes, "scene": session.scene()}

    @app.patch("/sessions/{session_id}/config")
    def patch_config(session_id: str, body: ConfigDelta):
        session = engine.get_session(session_id)
        delta = {k: v for k, v in body.model_dump().items() if v is not None}
        config = engine.patch_config(session, delta)
        return {
            "quotas": {ch.value: config.quota(ch) for ch in Channel},
            "tau_low": config.tau_low,
            "tau_high": config.tau_high,
            "seed": config.seed,
            "keyword_limit": config.keyword_limit,
        }

    @app.get("/sessions/{session_id}/scene")
    def get_scene(session_id: str):
        return engine.get_session(session_id).scene()

    @app.get("/sessions/{session_id}/scene.svg")
    def get_svg(session_id: str):
        session = engine.get_session(session_id)
        svg = emit_svg(session.scene(), engine.resources.manifest)
        return Response(content=svg, media_type="image/svg+xml")

    return app
