"""File ingestion and export of presentation complexes.

Two export dialects: a Macaulay2 script that rebuilds the complex as
honest graded module maps (matrix entries become monomials, the grade
difference between column and row), and a self-contained JSON bundle
that round-trips losslessly back into a :class:`PresentationComplex`.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Sequence

from .errors import (
    ParseError,
    SchemaError,
    UnsupportedDialectError,
    ValidationFailedError,
)
from .grades import Grade
from .homology import FieldSpec
from .matrices import GradedMatrix
from .presentation import PresentationComplex
from .simplicial import MultifilteredComplex, SimplicialComplex, close_births

BUNDLE_FORMAT = "graded-presentation"
BUNDLE_VERSION = 1

DIALECTS = ("macaulay2", "json")


def infer_r(C: PresentationComplex) -> int:
    for grades in (C.f.row_grades, C.f.col_grades, C.g.row_grades):
        if grades:
            return len(grades[0])
    raise ValueError("cannot infer the parameter count of an empty complex")


def presentation_bundle(
    C: PresentationComplex,
    field: Optional[FieldSpec] = None,
    r: Optional[int] = None,
    sparse: bool = True,
) -> dict:
    """JSON document carrying the full complex: ring, modules, matrices."""
    if r is None:
        r = infer_r(C)
    if field is None:
        field = FieldSpec.rational()
    fdoc = {"kind": field.kind}
    if field.p is not None:
        fdoc["p"] = field.p

    def gens(labels, grades):
        return [
            {"block": b, "index": i, "grade": list(g)}
            for (b, i), g in zip(labels, grades)
        ]

    return {
        "format": BUNDLE_FORMAT,
        "version": BUNDLE_VERSION,
        "n": C.n,
        "ring": {
            "r": r,
            "variables": ["x%d" % (i + 1) for i in range(r)],
            "field": fdoc,
        },
        "modules": {
            "domain": gens(C.f.col_labels, C.f.col_grades),
            "middle": gens(C.f.row_labels, C.f.row_grades),
            "codomain": gens(C.g.row_labels, C.g.row_grades),
        },
        "matrices": {
            "f": C.f.to_json(sparse=sparse),
            "g": C.g.to_json(sparse=sparse),
        },
    }


def bundle_to_json(
    C: PresentationComplex,
    field: Optional[FieldSpec] = None,
    r: Optional[int] = None,
    sparse: bool = True,
) -> str:
    return (
        json.dumps(presentation_bundle(C, field, r, sparse), indent=2, sort_keys=True)
        + "\n"
    )


def presentation_from_bundle(doc: dict | str) -> PresentationComplex:
    """Rebuild a PresentationComplex from its JSON bundle, revalidating."""
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise ParseError("bundle is not valid JSON: %s" % e) from None
    if not isinstance(doc, dict) or doc.get("format") != BUNDLE_FORMAT:
        raise SchemaError("not a %s bundle" % BUNDLE_FORMAT)
    if doc.get("version") != BUNDLE_VERSION:
        raise SchemaError("unsupported bundle version %r" % doc.get("version"))
    try:
        f = GradedMatrix.from_json(doc["matrices"]["f"])
        g = GradedMatrix.from_json(doc["matrices"]["g"])
        n = int(doc["n"])
        modules = doc["modules"]
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError("malformed bundle: %s" % e) from None
    for name, labels, grades in (
        ("domain", f.col_labels, f.col_grades),
        ("middle", f.row_labels, f.row_grades),
        ("codomain", g.row_labels, g.row_grades),
    ):
        listed = [
            ((gen["block"], gen["index"]), tuple(gen["grade"]))
            for gen in modules.get(name, ())
        ]
        if listed != list(zip(labels, grades)):
            raise SchemaError("module table %r disagrees with the matrices" % name)
    return PresentationComplex(f, g, n)


def _monomial(coeff: int, degree: Grade, variables: Sequence[str]) -> str:
    if coeff == 0:
        return "0"
    factors = []
    for x, d in zip(variables, degree):
        if d == 1:
            factors.append(x)
        elif d > 1:
            factors.append("%s^%d" % (x, d))
    if not factors:
        return str(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return "%d*%s" % (coeff, body)


def _m2_module(name: str, grades: Sequence[Grade]) -> str:
    if not grades:
        return "%s = R^0;" % name
    degs = ", ".join("-{%s}" % ", ".join(str(c) for c in g) for g in grades)
    return "%s = R^{%s};" % (name, degs)


def _m2_map(name: str, target: str, source: str, m: GradedMatrix,
            variables: Sequence[str]) -> str:
    if m.nrows == 0 or m.ncols == 0:
        return "%s = map(%s, %s, 0);" % (name, target, source)
    rows = []
    for i, row in enumerate(m.entries):
        terms = [
            _monomial(
                a,
                tuple(c - r for c, r in zip(m.col_grades[j], m.row_grades[i])),
                variables,
            )
            for j, a in enumerate(row)
        ]
        rows.append("{%s}" % ", ".join(terms))
    return "%s = map(%s, %s, {\n  %s});" % (name, target, source, ",\n  ".join(rows))


def macaulay2_script(
    C: PresentationComplex, field: Optional[FieldSpec] = None, r: Optional[int] = None
) -> str:
    """Macaulay2 source computing ker(g)/image(f) and its invariants."""
    if r is None:
        r = infer_r(C)
    if field is None:
        field = FieldSpec.rational()
    variables = ["x%d" % (i + 1) for i in range(r)]
    kk = "QQ" if field.kind == "rational" else "ZZ/%d" % field.p
    unit_degrees = ", ".join(
        "{%s}" % ", ".join("1" if j == i else "0" for j in range(r))
        for i in range(r)
    )
    lines = [
        "-- homological degree %d presentation complex: H = ker(g)/image(f)" % C.n,
        "-- matrix entries are monomials; each equals the grade gap between",
        "-- its column and row generators, so both maps are homogeneous.",
        "kk = %s;" % kk,
        "R = kk[%s, Degrees => {%s}];" % (", ".join(variables), unit_degrees),
        _m2_module("A", C.f.col_grades),
        _m2_module("B", C.f.row_grades),
        _m2_module("D", C.g.row_grades),
        _m2_map("f", "B", "A", C.f, variables),
        _m2_map("g", "D", "B", C.g, variables),
        "assert isHomogeneous f;",
        "assert isHomogeneous g;",
        "assert(g * f == 0);",
        "H = (kernel g) / (image f);",
        "-- downstream invariants:",
        "prune H",
        "presentation prune H",
        "betti res prune H",
        "hilbertSeries H",
    ]
    return "\n".join(lines) + "\n"


def export_cas(
    C: PresentationComplex,
    dialect: str,
    field: Optional[FieldSpec] = None,
    r: Optional[int] = None,
) -> str:
    """Serialize the complex for a CAS: ``macaulay2`` script or ``json`` bundle."""
    if dialect == "macaulay2":
        return macaulay2_script(C, field, r)
    if dialect == "json":
        return bundle_to_json(C, field, r)
    raise UnsupportedDialectError(
        "unknown dialect %r; available: %s" % (dialect, ", ".join(DIALECTS))
    )


def parse_filtration_text(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError("input is not valid JSON: %s" % e) from None
    if not isinstance(doc, dict):
        raise SchemaError("top level must be a JSON object")
    return doc


def filtration_from_doc(doc: dict, close: bool = False) -> MultifilteredComplex:
    """Build a MultifilteredComplex from its JSON document form.

    The document lists the vertex order, the simplices (faces may be
    omitted, they are closed in), and per-simplex birth grades. With
    ``close`` birth data may be partial as long as every maximal simplex
    has some; otherwise every simplex of the closure needs births.
    """
    for key in ("r", "vertices", "simplices"):
        if key not in doc:
            raise SchemaError("missing field %r" % key)
    r = doc["r"]
    if not isinstance(r, int) or isinstance(r, bool):
        raise SchemaError("field 'r' must be an integer")
    vertices = doc["vertices"]
    if not isinstance(vertices, list) or not all(
        isinstance(v, (int, str)) and not isinstance(v, bool) for v in vertices
    ):
        raise SchemaError("field 'vertices' must be a list of ints or strings")
    if len(set(map(str, vertices))) != len(vertices):
        raise SchemaError("vertex labels must be unambiguous")
    entries = doc["simplices"]
    if not isinstance(entries, list):
        raise SchemaError("field 'simplices' must be a list")

    simplices = []
    births = {}
    for k, cell in enumerate(entries):
        if not isinstance(cell, dict) or "v" not in cell:
            raise SchemaError("simplex entry %d needs a field 'v'" % k)
        vs = cell["v"]
        if not isinstance(vs, list) or not vs:
            raise SchemaError("simplex entry %d: 'v' must be a non-empty list" % k)
        simplices.append(vs)
        if "births" in cell and cell["births"] is not None:
            bs = cell["births"]
            if not isinstance(bs, list) or not all(isinstance(b, list) for b in bs):
                raise SchemaError(
                    "simplex entry %d: 'births' must be a list of grade lists" % k
                )
            key = frozenset(vs)
            if key in births:
                raise SchemaError("duplicate entry for simplex %r" % (vs,))
            births[key] = bs

    K = SimplicialComplex(vertices, simplices)
    if close:
        return close_births(K, births, r)
    return MultifilteredComplex(r, K, births)


def import_filtration(
    path: str | Path, *, close: bool = False, require_valid: bool = True
) -> MultifilteredComplex:
    """Read a multifiltered complex from a JSON file and validate it.

    Raises ParseError / SchemaError for malformed input and
    ValidationFailedError (carrying the report) when the face condition
    fails and ``require_valid`` is set.
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError("cannot read %s: %s" % (path, e)) from None
    M = filtration_from_doc(parse_filtration_text(text), close=close)
    if require_valid:
        report = M.validate()
        if not report.ok:
            raise ValidationFailedError(report)
    return M
