# folpol/api/main.py
"""
HTTP Surface - Commands of the engine behind FastAPI
"""

from typing import Optional

import structlog
from fastapi import FastAPI, Request
from fastapi.concurrency import run_in_threadpool

from folpol import __version__
from folpol.catalog import get_all_entries
from folpol.core.config import settings
from folpol.core.exceptions import FolpolException
from folpol.domain.models import COMMANDS, CatalogEntryModel, RunRequest
from folpol.domain.validators import build_document
from folpol.services.invariant_service import InvariantService
from folpol.utils.response_builder import ResponseBuilder

logger = structlog.get_logger("api")

app = FastAPI(
    title=settings.APP_NAME,
    version=__version__,
    description="Exact invariants of plane foliation singularities",
)


@app.exception_handler(FolpolException)
async def folpol_exception_handler(request: Request, exc: FolpolException):
    command = request.path_params.get("command")
    return ResponseBuilder.json_error(exc, command)


@app.get("/health")
async def health():
    return ResponseBuilder.ok("health", {"service": settings.APP_NAME, "version": __version__})


@app.get("/catalog")
async def catalog(kind: Optional[str] = None):
    entries = [CatalogEntryModel(**entry).model_dump() for entry in get_all_entries(kind)]
    return ResponseBuilder.ok("catalog", entries, meta={"count": len(entries)})


@app.get("/commands")
async def commands():
    return ResponseBuilder.ok("commands", list(COMMANDS))


@app.post("/run/{command}")
async def run(command: str, body: RunRequest):
    """
    Run one command.

    Mathematical errors answer 422, parse and usage errors 400.
    """
    document = build_document(body)
    result = await run_in_threadpool(InvariantService(document).run, command)
    logger.info("api_command", command=command, field=result["field"])
    return ResponseBuilder.ok(
        command,
        result["data"],
        meta={"field": result["field"], "duration_ms": result["duration_ms"], "input": document.to_dict()},
    )
