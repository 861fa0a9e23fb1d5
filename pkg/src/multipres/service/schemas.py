"""Request and response models for the HTTP service."""
from __future__ import annotations

from typing import Optional, Union

from pydantic import BaseModel, Field


class SimplexEntry(BaseModel):
    v: list[Union[int, str]]
    births: Optional[list[list[int]]] = None


class FiltrationDoc(BaseModel):
    """The same document the CLI reads from a file."""

    r: int
    vertices: list[Union[int, str]]
    simplices: list[SimplexEntry]


class FiltrationRequest(BaseModel):
    filtration: FiltrationDoc
    close_births: bool = False


class ViolationModel(BaseModel):
    simplex: str
    facet: str
    grade: list[int]


class ValidateResponse(BaseModel):
    ok: bool
    violations: list[ViolationModel]
    normalized: list[str]


class PresentRequest(FiltrationRequest):
    n: int = Field(ge=0)


class MatrixModel(BaseModel):
    rows: int
    cols: int
    row_grades: list[list[int]]
    col_grades: list[list[int]]
    row_labels: list[list[str]]
    col_labels: list[list[str]]
    entries: list[list[int]]


class PresentResponse(BaseModel):
    n: int
    r: int
    difference: MatrixModel
    induced_face: MatrixModel
    ambient_boundary: MatrixModel
    f: MatrixModel
    g: MatrixModel


class HilbertRequest(PresentRequest):
    box: Optional[list[int]] = None
    field: str = "gf:2"


class HilbertValue(BaseModel):
    grade: list[int]
    dim: int


class HilbertResponse(BaseModel):
    r: int
    box: list[int]
    field: str
    values: list[HilbertValue]


class CheckRequest(HilbertRequest):
    pass


class MismatchModel(BaseModel):
    grade: list[int]
    complex_dim: int
    oracle_dim: int


class CheckResponse(BaseModel):
    ok: bool
    grades_checked: int
    field: str
    mismatch: Optional[MismatchModel] = None


class ExportRequest(PresentRequest):
    dialect: str = "macaulay2"
    field: str = "q"


class ExportResponse(BaseModel):
    dialect: str
    content: str
