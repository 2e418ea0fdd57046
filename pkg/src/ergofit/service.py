"""Read-only HTTP service behind the what-if dashboard.

The dataset is loaded once at startup and never mutated; every endpoint is a
pure function of (dataset, request body), so identical requests produce
identical responses. `/api/stats`, `/api/correlation` and `/api/mismatch`
honour ``Accept: text/csv`` and otherwise answer JSON.
"""

from __future__ import annotations

import json
import uuid

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse, Response

from . import render
from .design import propose_dimensions, workstation_guidelines
from .errors import ErgofitError
from .fit import population_mismatch
from .model import FitConfig, PopulationDataset, spec_from_json, spec_to_json
from .presets import ruleset_from_json
from .stats import correlation_matrix


def _wants_csv(request: Request) -> bool:
    return "text/csv" in request.headers.get("accept", "")


def _csv_response(text: str) -> Response:
    return PlainTextResponse(text, media_type="text/csv")


async def _json_body(request: Request) -> object:
    try:
        return json.loads(await request.body())
    except json.JSONDecodeError as exc:
        raise ErgofitError(f"request body is not valid JSON: {exc}") from None


def create_app(
    dataset: PopulationDataset,
    cfg: FitConfig | None = None,
    ui_dir: str | None = None,
) -> FastAPI:
    """Build the service around one immutable dataset snapshot."""
    cfg = cfg or FitConfig()
    app = FastAPI(title="ergofit what-if service", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(ErgofitError)
    async def _bad_request(_request: Request, exc: ErgofitError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.exception_handler(Exception)
    async def _internal(_request: Request, exc: Exception) -> JSONResponse:
        error_id = uuid.uuid4().hex
        return JSONResponse(
            status_code=500,
            content={"error": "internal evaluation error", "id": error_id},
        )

    @app.get("/health")
    async def health() -> dict:
        return {
            "status": "ok",
            "records": len(dataset),
            "counts": render.counts_json(dataset),
            "source": dataset.source,
        }

    @app.get("/api/stats")
    async def stats(request: Request):
        rows = render.describe_rows(dataset, cfg)
        if _wants_csv(request):
            return _csv_response(render.describe_csv(rows))
        payload = render.describe_json(rows)
        payload["counts"] = render.counts_json(dataset)
        return payload

    @app.get("/api/correlation")
    async def correlation(request: Request):
        matrix = correlation_matrix(dataset)
        if _wants_csv(request):
            return _csv_response(render.correlation_csv(matrix))
        return render.correlation_json(matrix)

    @app.post("/api/mismatch")
    async def mismatch(request: Request):
        spec = spec_from_json(await _json_body(request))
        report = population_mismatch(dataset, spec, cfg)
        if _wants_csv(request):
            return _csv_response(render.mismatch_csv(report))
        return render.mismatch_json(report)

    @app.post("/api/propose")
    async def propose(request: Request):
        body = await _json_body(request)
        rules, base = ruleset_from_json(body)
        name = "proposed"
        if isinstance(body, dict) and isinstance(body.get("name"), str) and body["name"]:
            name = body["name"]
        spec = propose_dimensions(dataset, rules, cfg, base=base, name=name)
        return spec_to_json(spec)

    @app.get("/api/guidelines")
    async def guidelines():
        return render.guidelines_json(workstation_guidelines())

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="dashboard")

    return app
