from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from typeb_contraction.errors import SingularError
from typeb_contraction.linalg import RationalMatrix, bareiss_det, bareiss_rank


def square(max_size=7):
    return st.integers(1, max_size).flatmap(
        lambda k: st.lists(st.lists(st.integers(-6, 6), min_size=k, max_size=k), min_size=k, max_size=k))


def rect():
    return st.tuples(st.integers(1, 8), st.integers(1, 8)).flatmap(
        lambda rc: st.lists(st.lists(st.fractions(-5, 5, max_denominator=4), min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


def cofactor_det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))


def test_known_values():
    assert bareiss_det([[2, 1], [1, 3]]) == 5
    assert bareiss_rank([[1, 2], [2, 4]]) == 1
    m = RationalMatrix([[Fraction(1, 2), 0], [0, 4]])
    assert m.det("bareiss") == m.det("flint") == 2
    assert RationalMatrix.zeros(3, 4).rank() == 0
    assert RationalMatrix([[0, 0], [0, 0]]).det() == 0


@settings(max_examples=200)
@given(square())
def test_det_routes_agree_with_cofactors(rows):
    m = RationalMatrix(rows)
    expected = cofactor_det(rows)
    assert m.det("bareiss") == expected
    assert m.det("flint") == expected


@settings(max_examples=200)
@given(rect())
def test_rank_routes_agree(rows):
    m = RationalMatrix(rows)
    r = m.rank("bareiss")
    assert r == m.rank("flint") == m.transpose().rank("bareiss")
    assert r <= min(m.rows, m.cols)


@given(square(5), st.lists(st.integers(-9, 9), min_size=5, max_size=5))
def test_solve_round_trip(rows, rhs):
    m = RationalMatrix(rows)
    rhs = rhs[:m.rows]
    if m.det() == 0:
        with pytest.raises(SingularError):
            m.solve(rhs)
        return
    x = m.solve(rhs)
    assert [sum(a * b for a, b in zip(r, x)) for r in rows] == rhs


def test_stacking_and_shape_errors():
    a = RationalMatrix([[1, 0]])
    b = RationalMatrix([[0, 1]])
    assert a.vstack(b).rank() == 2
    assert a.hstack(b) == RationalMatrix([[1, 0, 0, 1]])
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        a.det()
    with pytest.raises(ValueError):
        a.rank("numpy")
