import pytest
from hypothesis import given, strategies as st

from multipres import (
    Antichain,
    DimensionError,
    NoElementBelowError,
    grades_below,
    join,
    leq,
    minimal_elements,
)
from multipres.grades import as_grade, format_grade, parse_grade_text


def test_order_and_join_examples():
    assert leq((1, 1), (2, 1))
    assert not leq((2, 1), (1, 1))
    assert not leq((1, 2), (2, 1)) and not leq((2, 1), (1, 2))
    assert join((1, 2), (2, 1)) == (2, 2)
    assert join((0, 0), (3, 1)) == (3, 1)


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionError):
        leq((1, 2), (1, 2, 3))
    with pytest.raises(DimensionError):
        join((1,), (1, 2))


def test_as_grade_rejects_bad_coordinates():
    with pytest.raises(ValueError):
        as_grade((-1, 0))
    with pytest.raises(ValueError):
        as_grade((True, 0))
    with pytest.raises(ValueError):
        as_grade((1.5, 0))
    with pytest.raises(DimensionError):
        as_grade(())
    with pytest.raises(DimensionError):
        as_grade((0,) * 33)
    assert as_grade((2**64 - 1,)) == (2**64 - 1,)
    with pytest.raises(ValueError):
        as_grade((2**64,))


def test_minimal_elements_drops_dominated():
    T = minimal_elements([(1, 2), (2, 1), (2, 2)])
    assert T.elements == ((1, 2), (2, 1))
    assert T.was_normalized


def test_antichain_is_canonical():
    a = Antichain([(2, 1), (1, 2)])
    b = Antichain([(1, 2), (2, 1)])
    assert a == b and a.elements == ((1, 2), (2, 1))
    assert not a.was_normalized
    assert Antichain([(1, 1), (1, 1)]).was_normalized


def test_empty_antichain():
    T = Antichain([], r=2)
    assert len(T) == 0
    assert not T.sat_contains((5, 5))
    U = minimal_elements([])
    assert len(U) == 0 and U.r is None


def test_sat_contains():
    T = Antichain([(0, 2), (1, 1)])
    assert T.sat_contains((0, 2))
    assert T.sat_contains((1, 2))
    assert T.sat_contains((5, 1))
    assert not T.sat_contains((1, 0))
    assert not T.sat_contains((0, 1))


def test_lex_min_below():
    T = Antichain([(0, 2), (1, 1)])
    assert T.lex_min_below((1, 2)) == (0, 2)
    assert T.lex_min_below((2, 1)) == (1, 1)
    with pytest.raises(NoElementBelowError):
        T.lex_min_below((0, 1))


def test_grades_below_is_lexicographic():
    got = list(grades_below((1, 2)))
    assert got == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]


def test_grade_text_roundtrip():
    assert parse_grade_text("2,2") == (2, 2)
    assert parse_grade_text("(0,3)") == (0, 3)
    assert format_grade((0, 3)) == "(0,3)"
    with pytest.raises(ValueError):
        parse_grade_text("a,b")


grades2 = st.tuples(st.integers(0, 6), st.integers(0, 6))


@given(grades2, grades2, grades2)
def test_join_laws(u, v, w):
    assert join(u, v) == join(v, u)
    assert join(u, join(v, w)) == join(join(u, v), w)
    assert join(u, u) == u
    assert leq(u, join(u, v)) and leq(v, join(u, v))


@given(st.lists(grades2, min_size=1, max_size=6), grades2)
def test_sat_is_upward_closed(points, v):
    T = Antichain(points)
    if T.sat_contains(v):
        assert T.sat_contains(join(v, (1, 1)))
    for u in T:
        assert T.sat_contains(u)


@given(st.lists(grades2, min_size=0, max_size=7))
def test_minimal_elements_generate_the_same_upset(points):
    T = minimal_elements(points, r=2)
    naive = lambda v: any(leq(u, v) for u in points)
    for v in grades_below((6, 6)):
        assert T.sat_contains(v) == naive(v)


@given(st.lists(grades2, min_size=1, max_size=6), grades2)
def test_lex_min_below_is_least_qualifying(points, v):
    T = Antichain(points)
    below = [u for u in T if leq(u, v)]
    if below:
        assert T.lex_min_below(v) == min(below)
    else:
        with pytest.raises(NoElementBelowError):
            T.lex_min_below(v)
