"""The graded chain complex presenting homology of a multifiltration.

For a valid multifiltered complex M and homological degree n this module
builds two homogeneous integer matrices

    f = [ difference | induced face ] : pairs(n) (+) gens(n+1) -> gens(n)
    g = ambient boundary              : gens(n) -> ambient(n-1)

with g * f = 0, such that evaluating ker(g)/im(f) at any grade v over a
field recovers the n-th homology of the subcomplex at v. Generators of
``gens(n)`` are the pairs (sigma, v) of an n-simplex and one of its
birth grades; all block and column orders are fixed lexicographically so
the output is canonical.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InternalInconsistencyError
from .grades import format_grade, join
from .matrices import (
    FreeGradedModule,
    GradedMatrix,
    ModuleGenerator,
    compose_entries,
    hconcat,
    is_zero,
    matrix_for,
)
from .simplicial import MultifilteredComplex, face, simplex_label


def generator_module(M: MultifilteredComplex, n: int) -> FreeGradedModule:
    """Free module on the birth events of the n-simplices.

    One generator per (sigma, v) with v in births(sigma); simplices in
    lexicographic order, birth grades in lexicographic order inside each
    block.
    """
    gens = [
        ModuleGenerator(simplex_label(s), format_grade(v), v)
        for s in M.complex.ordered_simplices(n)
        for v in M.birth(s)
    ]
    return FreeGradedModule(tuple(gens))


def pair_module(M: MultifilteredComplex, n: int) -> FreeGradedModule:
    """Free module on unordered pairs of distinct births of one n-simplex.

    The pair (v0, v1), v0 lexicographically smaller, sits in the join
    grade max(v0, v1).
    """
    gens = []
    for s in M.complex.ordered_simplices(n):
        label = simplex_label(s)
        for v0, v1 in combinations(M.birth(s).elements, 2):
            gens.append(
                ModuleGenerator(
                    label, format_grade(v0) + "," + format_grade(v1), join(v0, v1)
                )
            )
    return FreeGradedModule(tuple(gens))


def ambient_module(M: MultifilteredComplex, n: int) -> FreeGradedModule:
    """Free module with one grade-zero generator per (n-1)-simplex."""
    zero = (0,) * M.r
    gens = [
        ModuleGenerator(simplex_label(t), "", zero)
        for t in M.complex.ordered_simplices(n - 1)
    ]
    return FreeGradedModule(tuple(gens))


def difference_matrix(M: MultifilteredComplex, n: int) -> GradedMatrix:
    """Matrix of pairs(n) -> gens(n) sending (v0, v1) to v0 - v1.

    Each column has a single +1 in the row of the lexicographically
    smaller birth and a single -1 in the row of the larger one; both sit
    in the same simplex block, so the matrix is block diagonal.
    """
    gens = generator_module(M, n)
    pairs = pair_module(M, n)
    row_of = {(g.block, g.grade): i for i, g in enumerate(gens.generators)}
    entries = [[0] * pairs.rank for _ in range(gens.rank)]
    j = 0
    for s in M.complex.ordered_simplices(n):
        label = simplex_label(s)
        for v0, v1 in combinations(M.birth(s).elements, 2):
            entries[row_of[(label, v0)]][j] = 1
            entries[row_of[(label, v1)]][j] = -1
            j += 1
    return matrix_for(pairs, gens, entries)


def induced_face_matrix(M: MultifilteredComplex, n: int) -> GradedMatrix:
    """Matrix of gens(n+1) -> gens(n): the alternating sum of face maps.

    The column of (sigma, v) picks, for each facet tau = d_i(sigma), the
    lexicographically least birth of tau below v, with sign (-1)^i. The
    face condition guarantees such a birth exists. Facets of a simplex
    are pairwise distinct sets, so the n+2 entries land in distinct rows;
    entries still accumulate additively as a guard.
    """
    gens_lo = generator_module(M, n)
    gens_hi = generator_module(M, n + 1)
    row_of = {(g.block, g.grade): i for i, g in enumerate(gens_lo.generators)}
    entries = [[0] * gens_hi.rank for _ in range(gens_lo.rank)]
    j = 0
    for s in M.complex.ordered_simplices(n + 1):
        facets = [face(s, i) for i in range(len(s))]
        if len(set(facets)) != len(facets):
            raise InternalInconsistencyError("repeated facet of %r" % (s,))
        for v in M.birth(s):
            for i, t in enumerate(facets):
                w = M.birth(t).lex_min_below(v)
                entries[row_of[(simplex_label(t), w)]][j] += (-1) ** i
            j += 1
    return matrix_for(gens_hi, gens_lo, entries)


def ambient_boundary_matrix(M: MultifilteredComplex, n: int) -> GradedMatrix:
    """Matrix of gens(n) -> ambient(n-1), the simplicial boundary.

    Every generator (sigma, v) maps to the alternating sum of the facets
    of sigma, forgetting grades: the codomain is free on the (n-1)-
    simplices, all in grade zero. For n = 0 the codomain is zero and the
    matrix has no rows.
    """
    gens = generator_module(M, n)
    amb = ambient_module(M, n)
    row_of = {g.block: i for i, g in enumerate(amb.generators)}
    entries = [[0] * gens.rank for _ in range(amb.rank)]
    if n >= 1:
        j = 0
        for s in M.complex.ordered_simplices(n):
            for _ in M.birth(s):
                for i in range(len(s)):
                    entries[row_of[simplex_label(face(s, i))]][j] += (-1) ** i
                j += 1
    return matrix_for(gens, amb, entries)


@dataclass(frozen=True)
class PresentationComplex:
    """Two composable graded matrices with g * f = 0, presenting H_n."""

    f: GradedMatrix
    g: GradedMatrix
    n: int

    def __post_init__(self):
        if (
            self.g.col_grades != self.f.row_grades
            or self.g.col_labels != self.f.row_labels
        ):
            raise InternalInconsistencyError(
                "the middle module of f and g must agree"
            )
        if not is_zero(compose_entries(self.g, self.f)):
            raise InternalInconsistencyError("g * f is not zero")

    def domain(self) -> FreeGradedModule:
        return _module_from(self.f.col_labels, self.f.col_grades)

    def middle(self) -> FreeGradedModule:
        return _module_from(self.f.row_labels, self.f.row_grades)

    def codomain(self) -> FreeGradedModule:
        return _module_from(self.g.row_labels, self.g.row_grades)


def _module_from(labels, grades) -> FreeGradedModule:
    return FreeGradedModule(
        tuple(
            ModuleGenerator(b, i, g) for (b, i), g in zip(labels, grades)
        )
    )


def presentation_complex(M: MultifilteredComplex, n: int) -> PresentationComplex:
    """Build the degree-n presentation complex of a valid multifiltration."""
    if n < 0:
        raise ValueError("homological degree must be non-negative, got %r" % n)
    f = hconcat(difference_matrix(M, n), induced_face_matrix(M, n))
    g = ambient_boundary_matrix(M, n)
    return PresentationComplex(f, g, n)
