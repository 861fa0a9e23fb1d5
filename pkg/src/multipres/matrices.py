"""Graded integer matrices and free graded modules.

A :class:`GradedMatrix` is a homomorphism of free N^r-graded modules,
written against fixed homogeneous bases. Row and column metadata carry
the generator grades plus (block, index) labels naming each generator.
Homogeneity, nonzero entry only where the column grade dominates the
row grade, is asserted at construction: nothing unhomogeneous can even
be represented.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionError, HomogeneityError
from .grades import Grade, leq

Label = tuple[str, str]


@dataclass(frozen=True)
class ModuleGenerator:
    """One free generator: a block label, an index within the block, a grade."""

    block: str
    index: str
    grade: Grade


@dataclass(frozen=True)
class FreeGradedModule:
    """Finitely generated free graded module with an ordered basis."""

    generators: tuple[ModuleGenerator, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def grades(self) -> tuple[Grade, ...]:
        return tuple(g.grade for g in self.generators)

    @property
    def labels(self) -> tuple[Label, ...]:
        return tuple((g.block, g.index) for g in self.generators)


@dataclass(frozen=True)
class GradedMatrix:
    entries: tuple[tuple[int, ...], ...]
    row_grades: tuple[Grade, ...]
    col_grades: tuple[Grade, ...]
    row_labels: tuple[Label, ...]
    col_labels: tuple[Label, ...]

    def __post_init__(self):
        nr, nc = len(self.row_grades), len(self.col_grades)
        if len(self.entries) != nr or any(len(row) != nc for row in self.entries):
            raise DimensionError(
                "entry array is not %d x %d" % (nr, nc)
            )
        if len(self.row_labels) != nr or len(self.col_labels) != nc:
            raise DimensionError("label lists do not match the matrix shape")
        for i, row in enumerate(self.entries):
            rg = self.row_grades[i]
            for j, a in enumerate(row):
                if a and not leq(rg, self.col_grades[j]):
                    raise HomogeneityError(
                        "entry %d at (%d, %d): column grade %s does not dominate "
                        "row grade %s" % (a, i, j, self.col_grades[j], rg)
                    )

    @property
    def nrows(self) -> int:
        return len(self.row_grades)

    @property
    def ncols(self) -> int:
        return len(self.col_grades)

    def triples(self) -> list[tuple[int, int, int]]:
        """Nonzero entries as (row, col, value), row major."""
        return [
            (i, j, a)
            for i, row in enumerate(self.entries)
            for j, a in enumerate(row)
            if a
        ]

    def to_json(self, sparse: bool = False) -> dict:
        doc: dict = {
            "rows": self.nrows,
            "cols": self.ncols,
            "row_grades": [list(g) for g in self.row_grades],
            "col_grades": [list(g) for g in self.col_grades],
            "row_labels": [list(l) for l in self.row_labels],
            "col_labels": [list(l) for l in self.col_labels],
        }
        if sparse:
            doc["triples"] = [list(t) for t in self.triples()]
        else:
            doc["entries"] = [list(row) for row in self.entries]
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "GradedMatrix":
        nr, nc = int(doc["rows"]), int(doc["cols"])
        if "entries" in doc:
            entries = [[int(a) for a in row] for row in doc["entries"]]
        else:
            entries = [[0] * nc for _ in range(nr)]
            for i, j, a in doc["triples"]:
                entries[i][j] = int(a)
        return build_matrix(
            entries,
            [tuple(g) for g in doc["row_grades"]],
            [tuple(g) for g in doc["col_grades"]],
            [tuple(l) for l in doc["row_labels"]],
            [tuple(l) for l in doc["col_labels"]],
        )


def build_matrix(
    entries: Iterable[Iterable[int]],
    row_grades: Sequence[Grade],
    col_grades: Sequence[Grade],
    row_labels: Sequence[Label],
    col_labels: Sequence[Label],
) -> GradedMatrix:
    """Freeze plain sequences into a GradedMatrix."""
    return GradedMatrix(
        tuple(tuple(int(a) for a in row) for row in entries),
        tuple(tuple(g) for g in row_grades),
        tuple(tuple(g) for g in col_grades),
        tuple((str(b), str(i)) for b, i in row_labels),
        tuple((str(b), str(i)) for b, i in col_labels),
    )


def matrix_for(domain: FreeGradedModule, codomain: FreeGradedModule,
               entries: Iterable[Iterable[int]]) -> GradedMatrix:
    """Matrix of a map domain -> codomain against the given bases."""
    return build_matrix(
        entries, codomain.grades, domain.grades, codomain.labels, domain.labels
    )


def hconcat(a: GradedMatrix, b: GradedMatrix) -> GradedMatrix:
    """Concatenate two matrices with the same codomain, columns of a first."""
    if a.row_grades != b.row_grades or a.row_labels != b.row_labels:
        raise DimensionError("hconcat needs identical codomain metadata")
    entries = [ra + rb for ra, rb in zip(a.entries, b.entries)]
    return GradedMatrix(
        tuple(entries),
        a.row_grades,
        a.col_grades + b.col_grades,
        a.row_labels,
        a.col_labels + b.col_labels,
    )


def compose_entries(g: GradedMatrix, f: GradedMatrix) -> list[list[int]]:
    """Integer entries of the product g*f, exploiting sparsity of f."""
    if g.ncols != f.nrows:
        raise DimensionError(
            "cannot compose: %d columns vs %d rows" % (g.ncols, f.nrows)
        )
    out = [[0] * f.ncols for _ in range(g.nrows)]
    for k, frow in enumerate(f.entries):
        gcol = [g.entries[i][k] for i in range(g.nrows)]
        if not any(gcol):
            continue
        for j, a in enumerate(frow):
            if a:
                for i, b in enumerate(gcol):
                    if b:
                        out[i][j] += b * a
    return out


def is_zero(entries: Sequence[Sequence[int]]) -> bool:
    return all(not a for row in entries for a in row)
