"""The grade lattice N^r: componentwise order, joins, minimal elements.

A grade is a tuple of r natural numbers, ordered componentwise. Upward
closed ("saturated") subsets of the lattice are in bijection with finite
antichains via minimal elements; :class:`Antichain` keeps that encoding
canonical: elements pairwise incomparable, sorted lexicographically.
"""
from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DimensionError, NoElementBelowError

Grade = tuple[int, ...]

#: Hard cap on the number of filtration parameters.
MAX_PARAMS = 32

#: Coordinates are 64-bit unsigned, so joins cannot overflow.
MAX_COORD = 2**64 - 1


def as_grade(v: Sequence[int], r: Optional[int] = None) -> Grade:
    """Validate and freeze a grade vector, optionally against a known r."""
    g = tuple(v)
    if r is not None and len(g) != r:
        raise DimensionError("expected a grade of length %d, got %r" % (r, g))
    if not 1 <= len(g) <= MAX_PARAMS:
        raise DimensionError(
            "grade length must be between 1 and %d, got %d" % (MAX_PARAMS, len(g))
        )
    for c in g:
        if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c <= MAX_COORD:
            raise ValueError("grade coordinates must be naturals below 2^64: %r" % (v,))
    return g


def _same_length(v: Grade, w: Grade) -> None:
    if len(v) != len(w):
        raise DimensionError("grade dimensions differ: %d vs %d" % (len(v), len(w)))


def leq(v: Grade, w: Grade) -> bool:
    """Componentwise order: true iff v_i <= w_i for every i."""
    _same_length(v, w)
    return all(a <= b for a, b in zip(v, w))


def join(v: Grade, w: Grade) -> Grade:
    """Least upper bound, i.e. the componentwise maximum."""
    _same_length(v, w)
    return tuple(a if a >= b else b for a, b in zip(v, w))


def join_all(grades: Iterable[Grade], r: int) -> Grade:
    """Join of a finite family; the empty family joins to the origin."""
    out: Grade = (0,) * r
    for g in grades:
        out = join(out, g)
    return out


class Antichain:
    """Canonical antichain: minimal generators of an upward closed set.

    Construction accepts any finite family of grades. Duplicates and
    non-minimal entries are dropped silently; ``was_normalized`` records
    whether anything was dropped. Elements are stored in lexicographic
    order, which makes equal antichains compare equal structurally.
    """

    __slots__ = ("elements", "r", "was_normalized")

    def __init__(self, grades: Iterable[Sequence[int]], r: Optional[int] = None):
        given = [as_grade(g, r) for g in grades]
        if r is None and given:
            r = len(given[0])
            for g in given:
                if len(g) != r:
                    raise DimensionError(
                        "mixed grade lengths in one antichain: %d vs %d" % (r, len(g))
                    )
        distinct = set(given)
        minimal = sorted(
            g for g in distinct if not any(h != g and leq(h, g) for h in distinct)
        )
        self.elements: tuple[Grade, ...] = tuple(minimal)
        self.r = r
        self.was_normalized = tuple(sorted(given)) != self.elements

    def __iter__(self) -> Iterator[Grade]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, v) -> bool:
        return tuple(v) in self.elements

    def __eq__(self, other) -> bool:
        if not isinstance(other, Antichain):
            return NotImplemented
        return self.r == other.r and self.elements == other.elements

    def __hash__(self) -> int:
        return hash((self.r, self.elements))

    def __repr__(self) -> str:
        return "Antichain(%s)" % (list(self.elements),)

    def sat_contains(self, v: Sequence[int]) -> bool:
        """Membership of v in the saturation (upward closure) of this set."""
        g = tuple(v)
        if self.r is not None:
            g = as_grade(g, self.r)
        return any(leq(u, g) for u in self.elements)

    def lex_min_below(self, v: Sequence[int]) -> Grade:
        """Lexicographically smallest element below v.

        Elements are sorted, so the first one dominated by v is the
        answer. Raises :class:`NoElementBelowError` when none qualifies.
        """
        g = tuple(v)
        for u in self.elements:
            if leq(u, g):
                return u
        raise NoElementBelowError(
            "no element of %r lies below %s" % (self, format_grade(g))
        )

    def to_json(self) -> list[list[int]]:
        return [list(g) for g in self.elements]


def minimal_elements(grades: Iterable[Sequence[int]], r: Optional[int] = None) -> Antichain:
    """Antichain of minimal elements of a finite family of grades."""
    return Antichain(grades, r)


def sat_contains(antichain: Antichain, v: Sequence[int]) -> bool:
    return antichain.sat_contains(v)


def lex_min_below(antichain: Antichain, v: Sequence[int]) -> Grade:
    return antichain.lex_min_below(v)


def grades_below(box: Grade) -> Iterator[Grade]:
    """All grades dominated by ``box``, in lexicographic order."""
    return product(*(range(b + 1) for b in box))


def format_grade(v: Grade) -> str:
    return "(%s)" % ",".join(str(c) for c in v)


def parse_grade_text(text: str, r: Optional[int] = None) -> Grade:
    """Parse a comma separated grade such as ``2,2`` or ``(2,2)``."""
    s = text.strip().strip("()")
    try:
        parts = [int(t) for t in s.split(",")] if s else []
    except ValueError:
        raise ValueError("cannot parse grade from %r" % text) from None
    return as_grade(parts, r)
