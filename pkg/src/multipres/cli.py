"""Command line interface.

Subcommands: validate, present, hilbert, check, export. Input is always
a multifiltered complex in the JSON file format; every command accepts
``--close-births`` to complete partial birth data before anything else
runs. Exit codes: 0 ok, 2 validation failure, 3 parse failure, 4 check
mismatch.
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .errors import (
    IncompleteInputError,
    MultipresError,
    NotAMultifiltrationError,
    ParseError,
    SchemaError,
    ValidationFailedError,
)
from .grades import format_grade, parse_grade_text
from .homology import FieldSpec, hilbert, oracle_check
from .matrices import GradedMatrix
from .presentation import (
    ambient_boundary_matrix,
    difference_matrix,
    induced_face_matrix,
    presentation_complex,
)
from .export import bundle_to_json, export_cas, import_filtration

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_PARSE = 3
EXIT_MISMATCH = 4


def _render_matrix(title: str, m: GradedMatrix) -> list[str]:
    lines = ["matrix %s: %d x %d" % (title, m.nrows, m.ncols)]
    lines.append("cols:")
    if m.ncols == 0:
        lines.append("  (none)")
    for j in range(m.ncols):
        block, index = m.col_labels[j]
        head = block if not index else "%s : %s" % (block, index)
        lines.append("  [%d] %s @ %s" % (j, head, format_grade(m.col_grades[j])))
    lines.append("rows:")
    if m.nrows == 0:
        lines.append("  (none)")
        return lines
    heads = [
        "  [%d] %s @ %s" % (i, m.row_labels[i][0], format_grade(m.row_grades[i]))
        for i in range(m.nrows)
    ]
    pad = max(len(h) for h in heads)
    width = max((len(str(a)) for row in m.entries for a in row), default=1)
    for h, row in zip(heads, m.entries):
        cells = " ".join(str(a).rjust(width) for a in row)
        lines.append("%s | %s" % (h.ljust(pad), cells))
    return lines


def _grade_run(grades) -> str:
    return " ".join(format_grade(g) for g in grades)


def _cmd_validate(args) -> tuple[str, int]:
    try:
        M = import_filtration(args.input, close=args.close_births, require_valid=False)
    except IncompleteInputError as e:
        return "invalid input: %s\n" % e, EXIT_INVALID
    report = M.validate()
    lines = []
    if report.ok:
        lines.append("ok")
    else:
        lines.append("not a multifiltration: %d violation(s)" % len(report.violations))
        for v in report.violations:
            lines.append(
                "  simplex %s born at %s before its facet %s"
                % (v.simplex, format_grade(v.grade), v.facet)
            )
    if report.normalized:
        lines.append("note: births normalized for: " + ", ".join(report.normalized))
    return "\n".join(lines) + "\n", EXIT_OK if report.ok else EXIT_INVALID


def _cmd_present(args) -> tuple[str, int]:
    M = import_filtration(args.input, close=args.close_births)
    n = args.n
    C = presentation_complex(M, n)
    if args.format == "json":
        return bundle_to_json(C, r=M.r, sparse=False), EXIT_OK
    if args.format == "sparse":
        return bundle_to_json(C, r=M.r, sparse=True), EXIT_OK

    diff = difference_matrix(M, n)
    facemat = induced_face_matrix(M, n)
    amb = ambient_boundary_matrix(M, n)
    lines = [
        "presentation of homology in degree %d (r = %d)" % (n, M.r),
        "modules:",
        "  pairs[%d]   rank %d: %s" % (n, diff.ncols, _grade_run(diff.col_grades)),
        "  gens[%d]    rank %d: %s" % (n, diff.nrows, _grade_run(diff.row_grades)),
        "  gens[%d]    rank %d: %s" % (n + 1, facemat.ncols, _grade_run(facemat.col_grades)),
        "  ambient[%d] rank %d: %s" % (n - 1, amb.nrows, _grade_run(amb.row_grades)),
        "f = [ difference | induced face ], g = ambient boundary, g*f = 0",
        "",
    ]
    lines += _render_matrix("difference", diff)
    lines.append("")
    lines += _render_matrix("induced face", facemat)
    lines.append("")
    lines += _render_matrix("ambient boundary", amb)
    return "\n".join(lines) + "\n", EXIT_OK


def _table_payload(args, M, table, field) -> str:
    fmt = args.format
    if fmt is None:
        fmt = "grid" if M.r == 2 else "csv"
    if fmt == "grid":
        if M.r != 2:
            raise ValueError("grid output needs r = 2; use csv or json")
        return "\n".join(table.grid_lines()) + "\n"
    if fmt == "csv":
        return table.to_csv()
    import json as _json

    doc = table.to_json()
    doc["field"] = field.spec_string()
    return _json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _cmd_hilbert(args) -> tuple[str, int]:
    M = import_filtration(args.input, close=args.close_births)
    field = FieldSpec.parse(args.field)
    box = parse_grade_text(args.box, M.r) if args.box else M.bounding_box()
    C = presentation_complex(M, args.n)
    table = hilbert(C, box, field, jobs=args.jobs)
    return _table_payload(args, M, table, field), EXIT_OK


def _cmd_check(args) -> tuple[str, int]:
    M = import_filtration(args.input, close=args.close_births)
    field = FieldSpec.parse(args.field)
    box = parse_grade_text(args.box, M.r) if args.box else M.bounding_box()
    report = oracle_check(M, args.n, box, field, jobs=args.jobs)
    if report.ok:
        msg = "ok: presented and simplicial homology agree at %d grades over %s\n" % (
            report.grades_checked,
            field,
        )
        return msg, EXIT_OK
    mm = report.mismatch
    msg = "mismatch at %s: presentation gives %d, simplicial homology gives %d\n" % (
        format_grade(mm.grade),
        mm.complex_dim,
        mm.oracle_dim,
    )
    return msg, EXIT_MISMATCH


def _cmd_export(args) -> tuple[str, int]:
    M = import_filtration(args.input, close=args.close_births)
    field = FieldSpec.parse(args.field)
    dialect = "macaulay2" if args.format in (None, "cas") else args.format
    C = presentation_complex(M, args.n)
    return export_cas(C, dialect, field, r=M.r), EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multipres",
        description="Graded presentations and Hilbert functions of "
        "multifiltered simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_n=True):
        p.add_argument("input", help="JSON file with the multifiltered complex")
        p.add_argument(
            "--close-births",
            action="store_true",
            help="complete partial birth data from cofaces before running",
        )
        p.add_argument("--out", help="write output to this file instead of stdout")
        if with_n:
            p.add_argument("-n", type=int, required=True, help="homological degree")

    p = sub.add_parser("validate", help="check the face condition")
    common(p, with_n=False)
    p.set_defaults(run=_cmd_validate)

    p = sub.add_parser("present", help="build and print the presentation complex")
    common(p)
    p.add_argument(
        "--format", choices=["pretty", "json", "sparse"], default="pretty"
    )
    p.set_defaults(run=_cmd_present)

    p = sub.add_parser("hilbert", help="tabulate homology dimensions over a box")
    common(p)
    p.add_argument("--box", help="corner grade, e.g. 2,2 (default: bounding box)")
    p.add_argument("--field", default="gf:2", help="q or gf:p (default gf:2)")
    p.add_argument("--format", choices=["grid", "csv", "json"], default=None)
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for the grade loop")
    p.set_defaults(run=_cmd_hilbert)

    p = sub.add_parser("check", help="compare against direct simplicial homology")
    common(p)
    p.add_argument("--box", help="corner grade (default: bounding box)")
    p.add_argument("--field", default="gf:2", help="q or gf:p (default gf:2)")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for the grade loop")
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("export", help="emit a CAS script or a JSON bundle")
    common(p)
    p.add_argument(
        "--format",
        choices=["macaulay2", "json", "cas"],
        default="macaulay2",
        help="cas is an alias for macaulay2",
    )
    p.add_argument("--field", default="q", help="coefficients for the script (default q)")
    p.set_defaults(run=_cmd_export)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.run(args)
    except ValidationFailedError as e:
        print("invalid input: %s" % e, file=sys.stderr)
        for v in e.report.violations:
            print(
                "  simplex %s born at %s before its facet %s"
                % (v.simplex, format_grade(v.grade), v.facet),
                file=sys.stderr,
            )
        return EXIT_INVALID
    except (IncompleteInputError, NotAMultifiltrationError) as e:
        print("invalid input: %s" % e, file=sys.stderr)
        return EXIT_INVALID
    except (ParseError, SchemaError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_PARSE
    except (MultipresError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_INVALID
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return code


if __name__ == "__main__":
    sys.exit(main())
