"""HTTP service exposing the same operations as the command line.

POST bodies carry the structure file inline as JSON.  Malformed input maps
to 400, mathematically failing preconditions to 422; law checks that merely
FAIL still return 200 with the verdict in the body.
"""

from __future__ import annotations

from typing import Any

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from . import cli
from .errors import (
    DimensionMismatch, HypothesisFailed, KindMismatch, MissingRole,
    NotBalanced, PreconditionFailed, SchemaError, UnknownDemo, WreathkitError,
)
from .report import check_report, multi_report
from .structfile import emit, parse_obj
from .zoo import DEMO_NAMES, build_demo

app = FastAPI(title="wreathkit",
              description="verification and construction of monoidal "
                          "algebra structures")


class CheckRequest(BaseModel):
    file: dict[str, Any]
    law: str


class BuildRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    file: dict[str, Any]
    construct_name: str = Field(alias="construct")


class DemoRequest(BaseModel):
    name: str
    dim_l: int = 1


class ReportRequest(BaseModel):
    file: dict[str, Any]


class BuiltFile(BaseModel):
    file: dict[str, Any]
    text: str


def _bad_input(exc: Exception) -> HTTPException:
    return HTTPException(status_code=400, detail=str(exc))


def _math_failure(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


_INPUT_ERRORS = (SchemaError, MissingRole, DimensionMismatch, KindMismatch,
                 UnknownDemo)
_MATH_ERRORS = (PreconditionFailed, HypothesisFailed, NotBalanced,
                WreathkitError)


@app.get("/health")
def health() -> dict:
    from . import __version__
    return {"status": "ok", "version": __version__}


@app.get("/laws")
def laws() -> dict:
    return {"laws": list(cli.LAW_NAMES)}


@app.get("/demos")
def demos() -> dict:
    return {"demos": list(DEMO_NAMES)}


@app.get("/constructs")
def constructs() -> dict:
    return {"constructs": list(cli.CONSTRUCT_NAMES)}


@app.post("/check")
def check(req: CheckRequest) -> dict:
    try:
        outcome = cli.run_check(parse_obj(req.file), req.law)
    except _INPUT_ERRORS as exc:
        raise _bad_input(exc) from exc
    except _MATH_ERRORS as exc:
        raise _math_failure(exc) from exc
    return check_report(outcome)


@app.post("/report")
def report(req: ReportRequest) -> dict:
    try:
        outcomes = cli.run_report(parse_obj(req.file))
    except _INPUT_ERRORS as exc:
        raise _bad_input(exc) from exc
    except _MATH_ERRORS as exc:
        raise _math_failure(exc) from exc
    return multi_report(outcomes)


def _built_file(sf) -> BuiltFile:
    import json
    text = emit(sf)
    return BuiltFile(file=json.loads(text), text=text)


@app.post("/build")
def build(req: BuildRequest) -> BuiltFile:
    try:
        built = cli.run_build(parse_obj(req.file), req.construct_name)
    except _INPUT_ERRORS as exc:
        raise _bad_input(exc) from exc
    except _MATH_ERRORS as exc:
        raise _math_failure(exc) from exc
    return _built_file(built)


@app.post("/demo")
def demo(req: DemoRequest) -> BuiltFile:
    try:
        built = build_demo(req.name, req.dim_l).file
    except _INPUT_ERRORS as exc:
        raise _bad_input(exc) from exc
    except _MATH_ERRORS as exc:
        raise _math_failure(exc) from exc
    return _built_file(built)
