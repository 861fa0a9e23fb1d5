"""HTTP service wrapping the core package.

Stateless compute endpoints; each request carries the filtration
document inline. Domain errors map to 400 with the error class name,
invalid request shapes to FastAPI's usual 422.

Run with: uvicorn multipres.service.app:app
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import MultipresError, ValidationFailedError
from ..export import export_cas, filtration_from_doc
from ..homology import FieldSpec, hilbert, oracle_check
from ..matrices import GradedMatrix
from ..presentation import (
    ambient_boundary_matrix,
    difference_matrix,
    induced_face_matrix,
    presentation_complex,
)
from .schemas import (
    CheckRequest,
    CheckResponse,
    ExportRequest,
    ExportResponse,
    FiltrationRequest,
    HilbertRequest,
    HilbertResponse,
    PresentRequest,
    PresentResponse,
    ValidateResponse,
)

app = FastAPI(
    title="multipres",
    version=__version__,
    description="Graded presentations and Hilbert functions of "
    "multifiltered simplicial complexes.",
)


@app.exception_handler(MultipresError)
async def _domain_error(request: Request, exc: MultipresError):
    detail = {"error": type(exc).__name__, "detail": str(exc)}
    if isinstance(exc, ValidationFailedError):
        detail["report"] = exc.report.to_json()
    return JSONResponse(status_code=400, content=detail)


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError):
    return JSONResponse(
        status_code=400, content={"error": "ValueError", "detail": str(exc)}
    )


def _ingest(req: FiltrationRequest, require_valid: bool = True):
    M = filtration_from_doc(
        req.filtration.model_dump(exclude_none=True), close=req.close_births
    )
    if require_valid:
        report = M.validate()
        if not report.ok:
            raise ValidationFailedError(report)
    return M


def _matrix_model(m: GradedMatrix) -> dict:
    return m.to_json(sparse=False)


@app.get("/health")
async def health():
    return {"status": "ok", "version": __version__}


@app.post("/validate", response_model=ValidateResponse)
async def validate(req: FiltrationRequest) -> ValidateResponse:
    M = _ingest(req, require_valid=False)
    report = M.validate()
    return ValidateResponse(**report.to_json())


@app.post("/present", response_model=PresentResponse)
async def present(req: PresentRequest) -> PresentResponse:
    M = _ingest(req)
    C = presentation_complex(M, req.n)
    return PresentResponse(
        n=req.n,
        r=M.r,
        difference=_matrix_model(difference_matrix(M, req.n)),
        induced_face=_matrix_model(induced_face_matrix(M, req.n)),
        ambient_boundary=_matrix_model(ambient_boundary_matrix(M, req.n)),
        f=_matrix_model(C.f),
        g=_matrix_model(C.g),
    )


@app.post("/hilbert", response_model=HilbertResponse)
async def hilbert_endpoint(req: HilbertRequest) -> HilbertResponse:
    M = _ingest(req)
    field = FieldSpec.parse(req.field)
    box = tuple(req.box) if req.box is not None else M.bounding_box()
    if len(box) != M.r:
        raise ValueError("box must have length %d" % M.r)
    C = presentation_complex(M, req.n)
    table = hilbert(C, box, field)
    doc = table.to_json()
    return HilbertResponse(field=field.spec_string(), **doc)


@app.post("/check", response_model=CheckResponse)
async def check(req: CheckRequest) -> CheckResponse:
    M = _ingest(req)
    field = FieldSpec.parse(req.field)
    box = tuple(req.box) if req.box is not None else M.bounding_box()
    if len(box) != M.r:
        raise ValueError("box must have length %d" % M.r)
    report = oracle_check(M, req.n, box, field)
    return CheckResponse(field=field.spec_string(), **report.to_json())


@app.post("/export", response_model=ExportResponse)
async def export(req: ExportRequest) -> ExportResponse:
    M = _ingest(req)
    field = FieldSpec.parse(req.field)
    C = presentation_complex(M, req.n)
    dialect = "macaulay2" if req.dialect == "cas" else req.dialect
    return ExportResponse(dialect=dialect, content=export_cas(C, dialect, field, r=M.r))
