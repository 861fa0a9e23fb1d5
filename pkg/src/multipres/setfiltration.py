"""Compact multifiltrations of finite sets, and their free presentations.

Each element of the colimit set carries the antichain of grades where it
first appears; the filtration at grade v is then exactly the set of
elements whose antichain reaches below v. The cokernel of
:func:`free_presentation` recovers those level sets as the grade-wise
dimensions of a graded module.
"""
from __future__ import annotations

from itertools import combinations
from typing import Dict, Iterable, Mapping, Sequence

from .errors import (
    DimensionError,
    EmptyIdealError,
    IncompleteInputError,
    NotAMultifiltrationError,
    SchemaError,
)
from .grades import Antichain, Grade, format_grade, grades_below, join, join_all
from .matrices import GradedMatrix, build_matrix


class SetMultifiltration:
    """Finitely many labelled elements, each with a birth antichain."""

    def __init__(self, r: int, elements: Mapping[str, Antichain | Iterable[Sequence[int]]]):
        if not 1 <= r <= 32:
            raise DimensionError("parameter count must be between 1 and 32, got %r" % r)
        self.r = r
        table: Dict[str, Antichain] = {}
        for label in sorted(elements):
            if not isinstance(label, str):
                raise SchemaError("element labels must be strings, got %r" % (label,))
            value = elements[label]
            ac = value if isinstance(value, Antichain) else Antichain(value, r)
            if ac.r != r:
                raise DimensionError(
                    "births of %r have dimension %r, expected %d" % (label, ac.r, r)
                )
            if len(ac) == 0:
                raise IncompleteInputError("element %r has an empty birth set" % label)
            table[label] = ac
        self.elements: Dict[str, Antichain] = table

    def labels(self) -> tuple[str, ...]:
        return tuple(self.elements)

    def birth(self, label: str) -> Antichain:
        return self.elements[label]

    def support_at(self, v: Sequence[int]) -> tuple[str, ...]:
        """Labels of the elements present at grade v, sorted."""
        g = tuple(v)
        return tuple(x for x, ac in self.elements.items() if ac.sat_contains(g))

    def is_one_critical(self) -> bool:
        """True when every element is born exactly once."""
        return all(len(ac) == 1 for ac in self.elements.values())

    def bounding_box(self) -> Grade:
        return join_all((g for ac in self.elements.values() for g in ac), self.r)

    def tabulate(self, box: Sequence[int]) -> Dict[Grade, tuple[str, ...]]:
        """Level sets over every grade below ``box``."""
        b = tuple(box)
        return {v: self.support_at(v) for v in grades_below(b)}

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "elements": {x: ac.to_json() for x, ac in self.elements.items()},
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SetMultifiltration":
        if not isinstance(doc, dict) or "r" not in doc or "elements" not in doc:
            raise SchemaError("expected an object with fields 'r' and 'elements'")
        return cls(doc["r"], doc["elements"])

    def __eq__(self, other):
        if not isinstance(other, SetMultifiltration):
            return NotImplemented
        return self.r == other.r and self.elements == other.elements

    def __repr__(self) -> str:
        return "SetMultifiltration(r=%d, %d elements)" % (self.r, len(self.elements))


def from_tabulated(
    r: int,
    grid: Mapping[Grade, Iterable[str]] | Iterable[dict],
    box: Sequence[int],
) -> SetMultifiltration:
    """Recover birth antichains from per-grade level sets.

    ``grid`` maps every grade below ``box`` to the labels present there
    (grades with no entry count as empty). Labels must be monotone: once
    present, present at every larger grade, otherwise the data cannot
    come from a multifiltration of sets and
    :class:`NotAMultifiltrationError` names a witness (label, v, w).
    """
    b = tuple(box)
    table: Dict[Grade, frozenset] = {}
    if isinstance(grid, Mapping):
        items = [(tuple(k), v) for k, v in grid.items()]
    else:
        items = []
        for cell in grid:
            if not isinstance(cell, dict) or "grade" not in cell or "labels" not in cell:
                raise SchemaError("grid cells need 'grade' and 'labels' fields")
            items.append((tuple(cell["grade"]), cell["labels"]))
    for v, labels in items:
        if len(v) != r:
            raise DimensionError("grade %r does not have length %d" % (v, r))
        if v in table:
            raise SchemaError("grade %s listed twice" % format_grade(v))
        labels = list(labels)
        if len(set(labels)) != len(labels):
            raise SchemaError("duplicate labels at grade %s" % format_grade(v))
        table[v] = frozenset(labels)

    # Monotone along cover steps is monotone everywhere.
    for v in grades_below(b):
        here = table.get(v, frozenset())
        for i in range(r):
            if v[i] >= b[i]:
                continue
            w = v[:i] + (v[i] + 1,) + v[i + 1 :]
            there = table.get(w, frozenset())
            missing = sorted(here - there)
            if missing:
                raise NotAMultifiltrationError(missing[0], v, w)

    support: Dict[str, list[Grade]] = {}
    for v in grades_below(b):
        for x in table.get(v, ()):
            support.setdefault(x, []).append(v)
    return SetMultifiltration(r, {x: Antichain(vs, r) for x, vs in support.items()})


def from_tabulated_doc(doc: dict) -> SetMultifiltration:
    """Parse the document form {"r": 2, "box": [2,2], "grid": [cells]}."""
    if not isinstance(doc, dict) or not {"r", "box", "grid"} <= set(doc):
        raise SchemaError("expected an object with fields 'r', 'box' and 'grid'")
    return from_tabulated(doc["r"], doc["grid"], doc["box"])


def to_monomial_ideal(antichain: Antichain) -> tuple[Grade, ...]:
    """Exponent vectors of the minimal monomial generators.

    The antichain is already the unique minimal generating set of the
    ideal it spans, so this is mostly a change of reading.
    """
    if len(antichain) == 0:
        raise EmptyIdealError("an empty antichain generates no monomial ideal")
    return antichain.elements


def _antichain_multiset(x) -> list:
    if isinstance(x, SetMultifiltration):
        return [ac.elements for ac in x.elements.values()]
    out = []
    for ac in x:
        if not isinstance(ac, Antichain):
            raise SchemaError("expected an Antichain, got %r" % (ac,))
        out.append(ac.elements)
    return out


def modules_isomorphic(
    a: SetMultifiltration | Iterable[Antichain],
    b: SetMultifiltration | Iterable[Antichain],
) -> bool:
    """Whether the two induced graded modules are isomorphic.

    Arguments are set multifiltrations or plain collections of birth
    antichains. Direct sums of the cyclic pieces are isomorphic exactly
    when the multisets of antichains agree; labels play no role.
    """
    return sorted(_antichain_multiset(a)) == sorted(_antichain_multiset(b))


class SetPresentation:
    """Free presentation of the graded module of a set multifiltration.

    Rows of ``matrix`` are the generators (x, v in births(x)); columns
    are the pairs of distinct births of one element, sitting in the join
    grade, mapping to the difference of the two generators. Its cokernel
    has level dimension equal to the size of the level set everywhere.
    """

    def __init__(self, filtration: SetMultifiltration):
        self.filtration = filtration
        gens: list[tuple[str, Grade]] = []
        for x, ac in filtration.elements.items():
            gens.extend((x, v) for v in ac)
        rels: list[tuple[str, Grade, Grade]] = []
        for x, ac in filtration.elements.items():
            rels.extend((x, v0, v1) for v0, v1 in combinations(ac.elements, 2))
        self.generators = tuple(gens)
        self.relations = tuple(rels)

        index = {gv: i for i, gv in enumerate(gens)}
        entries = [[0] * len(rels) for _ in gens]
        for j, (x, v0, v1) in enumerate(rels):
            entries[index[(x, v0)]][j] = 1
            entries[index[(x, v1)]][j] = -1
        self.matrix: GradedMatrix = build_matrix(
            entries,
            [v for _, v in gens],
            [join(v0, v1) for _, v0, v1 in rels],
            [(x, format_grade(v)) for x, v in gens],
            [(x, format_grade(v0) + "," + format_grade(v1)) for x, v0, v1 in rels],
        )


def free_presentation(filtration: SetMultifiltration) -> SetPresentation:
    return SetPresentation(filtration)
