"""Grading groups: lex order laws, cyclic torsion behavior, arithmetic."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gradedrings import GradingGroup
from gradedrings.errors import GroupMismatchError, UnorderedGradingError

G1 = GradingGroup.free_lex(1)
G3 = GradingGroup.free_lex(3)
C5 = GradingGroup.cyclic(5)

vec3 = st.tuples(st.integers(-50, 50), st.integers(-50, 50),
                 st.integers(-50, 50))


@given(vec3, vec3)
def test_trichotomy(a, b):
    x, y = G3.grade(a), G3.grade(b)
    assert (x < y) + (x == y) + (x > y) == 1


@given(vec3, vec3, vec3)
def test_transitivity(a, b, c):
    x, y, z = (G3.grade(v) for v in (a, b, c))
    if x <= y and y <= z:
        assert x <= z


@given(vec3, vec3, vec3)
def test_translation_invariance(a, b, c):
    x, y, z = (G3.grade(v) for v in (a, b, c))
    assert (x < y) == (x + z < y + z)


@given(vec3)
def test_group_laws(a):
    x = G3.grade(a)
    zero = G3.zero()
    assert x + zero == x
    assert x + (-x) == zero
    assert x - x == zero
    assert -(-x) == x


def test_lex_order_is_leftmost_first():
    assert G3.grade((1, 0, 0)) > G3.grade((0, 5, 5))
    assert G3.grade((0, 1, 0)) > G3.grade((0, 0, 9))
    assert G3.grade((-1, 7, 7)) < G3.zero()


def test_rank_one_accepts_plain_ints():
    assert G1.grade(3) == G1.grade((3,))
    assert G1.grade(2) + G1.grade(5) == G1.grade(7)


def test_cyclic_arithmetic_wraps():
    a = C5.grade(3)
    assert a + C5.grade(4) == C5.grade(2)
    assert -a == C5.grade(2)
    assert (a + a + a + a + a).is_zero()


def test_cyclic_grades_are_unordered():
    with pytest.raises(UnorderedGradingError):
        C5.grade(1) < C5.grade(2)
    with pytest.raises(UnorderedGradingError):
        C5.grade(1) <= C5.grade(1)


def test_sort_token_agrees_with_the_order():
    grades = [G3.grade((i, j, k)) for i in (-2, 0, 2) for j in (-1, 1)
              for k in (0, 3)]
    by_token = sorted(grades, key=lambda g: g.sort_token())
    for u, v in zip(by_token, by_token[1:]):
        assert u <= v


def test_cross_group_operations_are_rejected():
    with pytest.raises(GroupMismatchError):
        G1.grade(1) + C5.grade(1)
    with pytest.raises(GroupMismatchError):
        G3.grade((1, 0, 0)) < G1.grade(0)


def test_grade_value_validation():
    with pytest.raises(Exception):
        G3.grade((1, 2))  # wrong arity
    assert C5.grade(12) == C5.grade(2)


def test_is_torsion_free_flag():
    assert G1.is_torsion_free()
    assert G3.is_torsion_free()
    assert not C5.is_torsion_free()
