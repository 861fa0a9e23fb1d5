"""Finite simplicial complexes and their multifiltrations.

Vertices keep the order in which they were listed; an ordered simplex is
the tuple of its vertices sorted by that order, and all lexicographic
comparisons between simplices are taken against vertex positions. A
multifiltration attaches to every simplex the antichain of grades at
which it is born; the face condition (no simplex before its facets) is
what :meth:`MultifilteredComplex.validate` checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import (
    DimensionError,
    IncompleteInputError,
    SchemaError,
)
from .grades import Antichain, Grade, join_all

Vertex = Hashable
Simplex = Tuple[Vertex, ...]

#: Simplices may have at most this dimension.
MAX_DIM = 31


def face(s: Simplex, i: int) -> Simplex:
    """The i-th facet: drop the i-th vertex of an ordered simplex."""
    if not 0 <= i < len(s):
        raise IndexError("face index %d out of range for %r" % (i, s))
    return s[:i] + s[i + 1 :]


def simplex_label(s: Simplex) -> str:
    return "<".join(str(v) for v in s)


class SimplicialComplex:
    """A finite abstract simplicial complex with ordered vertices.

    The constructor closes the given simplices downward and adds a
    singleton for every listed vertex, so the stored family is always a
    complex. Simplices are exposed as ordered tuples.
    """

    def __init__(self, vertices: Sequence[Vertex], simplices: Iterable[Iterable[Vertex]] = ()):
        self.vertices: tuple[Vertex, ...] = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise SchemaError("duplicate vertices in vertex list")
        self._pos: Dict[Vertex, int] = {v: i for i, v in enumerate(self.vertices)}

        closed: set[frozenset] = {frozenset((v,)) for v in self.vertices}
        for raw in simplices:
            s = tuple(raw)
            if not s:
                raise SchemaError("the empty simplex is not allowed")
            if len(set(s)) != len(s):
                raise SchemaError("repeated vertex in simplex %r" % (s,))
            for v in s:
                if v not in self._pos:
                    raise SchemaError("simplex %r uses unknown vertex %r" % (s, v))
            if len(s) - 1 > MAX_DIM:
                raise DimensionError(
                    "simplex %r exceeds the dimension cap %d" % (s, MAX_DIM)
                )
            for k in range(1, len(s) + 1):
                for sub in combinations(s, k):
                    closed.add(frozenset(sub))

        by_dim: Dict[int, List[Simplex]] = {}
        for fs in closed:
            t = self.canonical(fs)
            by_dim.setdefault(len(t) - 1, []).append(t)
        for n in by_dim:
            by_dim[n].sort(key=self.position_key)
        self._by_dim = by_dim

    def canonical(self, s: Iterable[Vertex]) -> Simplex:
        """Vertices of s sorted into vertex order."""
        try:
            return tuple(sorted(s, key=self._pos.__getitem__))
        except KeyError as e:
            raise SchemaError("unknown vertex %r" % (e.args[0],)) from None

    def position_key(self, s: Simplex) -> tuple[int, ...]:
        return tuple(self._pos[v] for v in s)

    @property
    def dim(self) -> int:
        return max(self._by_dim) if self._by_dim else -1

    def ordered_simplices(self, n: int) -> list[Simplex]:
        """All n-simplices as ordered tuples, lexicographically sorted."""
        return list(self._by_dim.get(n, ()))

    def all_simplices(self) -> Iterable[Simplex]:
        """Every simplex, by dimension then lexicographic order."""
        for n in sorted(self._by_dim):
            yield from self._by_dim[n]

    def __contains__(self, s: Iterable[Vertex]) -> bool:
        t = tuple(s)
        return t in self._by_dim.get(len(t) - 1, ())

    def simplex_set(self) -> frozenset:
        return frozenset(frozenset(s) for n in self._by_dim for s in self._by_dim[n])

    def n_simplices(self) -> int:
        return sum(len(v) for v in self._by_dim.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.simplex_set() == other.simplex_set()

    def __hash__(self):
        return hash((self.vertices, self.simplex_set()))

    def __repr__(self) -> str:
        return "SimplicialComplex(%d vertices, %d simplices, dim %d)" % (
            len(self.vertices),
            self.n_simplices(),
            self.dim,
        )


@dataclass(frozen=True)
class Violation:
    """A simplex born at ``grade`` before its facet: the face condition fails."""

    simplex: str
    facet: str
    grade: Grade

    def to_json(self) -> dict:
        return {"simplex": self.simplex, "facet": self.facet, "grade": list(self.grade)}


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]
    normalized: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [v.to_json() for v in self.violations],
            "normalized": list(self.normalized),
        }


class MultifilteredComplex:
    """A simplicial complex with a birth antichain on every simplex."""

    def __init__(
        self,
        r: int,
        complex: SimplicialComplex,
        births: Mapping[Iterable[Vertex], Antichain | Iterable[Sequence[int]]],
    ):
        if not 1 <= r <= 32:
            raise DimensionError("parameter count must be between 1 and 32, got %r" % r)
        self.r = r
        self.complex = complex

        table: Dict[Simplex, Antichain] = {}
        for key, value in births.items():
            s = complex.canonical(key)
            if s not in complex:
                raise SchemaError("births given for %r which is not a simplex" % (key,))
            if s in table:
                raise SchemaError("duplicate births entry for simplex %s" % simplex_label(s))
            ac = value if isinstance(value, Antichain) else Antichain(value, r)
            if ac.r != r:
                raise DimensionError(
                    "births of %s have dimension %r, expected %d"
                    % (simplex_label(s), ac.r, r)
                )
            if len(ac) == 0:
                raise IncompleteInputError(
                    "simplex %s has an empty birth set" % simplex_label(s)
                )
            table[s] = ac

        missing = [s for s in complex.all_simplices() if s not in table]
        if missing:
            raise IncompleteInputError(
                "no births for simplices: %s"
                % ", ".join(simplex_label(s) for s in missing[:8])
            )
        self._births = table

    def birth(self, s: Iterable[Vertex]) -> Antichain:
        return self._births[self.complex.canonical(s)]

    def bounding_box(self) -> Grade:
        """Join of every birth grade; beyond it nothing changes."""
        return join_all(
            (g for ac in self._births.values() for g in ac), self.r
        )

    def normalized_simplices(self) -> tuple[str, ...]:
        return tuple(
            simplex_label(s)
            for s in self.complex.all_simplices()
            if self._births[s].was_normalized
        )

    def validate(self) -> ValidationReport:
        """Check the face condition everywhere.

        A violation (sigma, tau, v) means sigma is present at v while its
        facet tau is not, so the levelwise family fails to be a complex.
        """
        found: list[Violation] = []
        for s in self.complex.all_simplices():
            if len(s) == 1:
                continue
            gen_s = self._births[s]
            for i in range(len(s)):
                t = face(s, i)
                gen_t = self._births[t]
                for v in gen_s:
                    if not gen_t.sat_contains(v):
                        found.append(
                            Violation(simplex_label(s), simplex_label(t), v)
                        )
        return ValidationReport(not found, tuple(found), self.normalized_simplices())

    def complex_at(self, v: Sequence[int]) -> SimplicialComplex:
        """The subcomplex of simplices already born at grade v."""
        g = tuple(v)
        verts = [
            x for x in self.complex.vertices if self._births[(x,)].sat_contains(g)
        ]
        present = [
            s for s in self.complex.all_simplices() if self._births[s].sat_contains(g)
        ]
        return SimplicialComplex(verts, present)

    def json_doc(self) -> dict:
        """The document form this object round-trips through."""
        return {
            "r": self.r,
            "vertices": list(self.complex.vertices),
            "simplices": [
                {"v": list(s), "births": self._births[s].to_json()}
                for s in self.complex.all_simplices()
            ],
        }

    def __repr__(self) -> str:
        return "MultifilteredComplex(r=%d, %r)" % (self.r, self.complex)


def close_births(
    complex: SimplicialComplex,
    partial: Mapping[Iterable[Vertex], Antichain | Iterable[Sequence[int]]],
    r: int,
) -> MultifilteredComplex:
    """Complete partial birth data to a valid multifiltration.

    Every maximal simplex must come with births. Walking dimensions top
    down, each simplex receives the minimal elements of its own entry
    together with everything its cofaces already collected; the result
    always satisfies the face condition and leaves complete valid input
    unchanged.
    """
    given: Dict[Simplex, Antichain] = {}
    for key, value in partial.items():
        s = complex.canonical(key)
        if s not in complex:
            raise SchemaError("births given for %r which is not a simplex" % (key,))
        ac = value if isinstance(value, Antichain) else Antichain(value, r)
        given[s] = ac

    cofaces: Dict[Simplex, List[Simplex]] = {}
    for n in range(1, complex.dim + 1):
        for s in complex.ordered_simplices(n):
            for i in range(len(s)):
                cofaces.setdefault(face(s, i), []).append(s)

    births: Dict[Simplex, Antichain] = {}
    for n in range(complex.dim, -1, -1):
        for s in complex.ordered_simplices(n):
            collected = list(given[s].elements) if s in given else []
            for c in cofaces.get(s, ()):
                collected.extend(births[c].elements)
            if not collected:
                raise IncompleteInputError(
                    "maximal simplex %s has no birth data" % simplex_label(s)
                )
            # Rebuild from minimal elements so the normalization flag only
            # reflects the caller's own entry, not the closure unions.
            ac = Antichain(Antichain(collected, r).elements, r)
            if s in given and given[s].was_normalized:
                ac.was_normalized = True
            births[s] = ac

    return MultifilteredComplex(r, complex, births)
