from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rootloci.arith import (RatMatrix, nullspace, rank, rank_of_vectors, rref,
                            solve_in_span)

from strategies import small_rationals


def test_rref_identity():
    I = RatMatrix.identity(2)
    r, k = rref(I)
    assert r == I and k == 2


def test_rref_single_row_scaling():
    m = RatMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)]])
    r, k = rref(m)
    assert r.row(0) == (1, Fraction(2, 3)) and k == 1


def test_rref_leaves_input_unchanged():
    m = RatMatrix.from_rows([[2, 4], [1, 3]])
    before = m.entries
    rref(m)
    assert m.entries == before


def test_proportional_rows_rank_one():
    assert rank(RatMatrix.from_rows([[1, 2], [2, 4]])) == 1


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        RatMatrix.from_rows([[1, 2], [3]])


def test_solve_first_column():
    cols = RatMatrix.from_columns([[1, 0, 2], [0, 1, 1]])
    assert solve_in_span([1, 0, 2], cols) == (1, 0)


def test_solve_zero_target():
    cols = RatMatrix.from_columns([[1, 2], [3, 4], [5, 6]])
    assert solve_in_span([0, 0], cols) == (0, 0, 0)


def test_solve_outside_rank_one_span():
    cols = RatMatrix.from_columns([[1, 2], [2, 4]])
    assert solve_in_span([1, 0], cols) is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_in_span([1, 2, 3], RatMatrix.identity(2))


def test_nullspace_basic():
    m = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6]])
    ns = nullspace(m)
    assert len(ns) == 2
    for x in ns:
        assert m.apply(x) == (0, 0)


matrices = st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(small_rationals, min_size=c, max_size=c),
                       min_size=r, max_size=r)))


@given(matrices)
def test_rank_nullity(rows):
    m = RatMatrix.from_rows(rows)
    assert rank(m) + len(nullspace(m)) == m.cols
    assert rank(m) == rank(m.transpose())


@given(matrices, st.data())
def test_solve_recovers_combination(rows, data):
    m = RatMatrix.from_rows(rows)
    x = data.draw(st.lists(small_rationals, min_size=m.cols, max_size=m.cols))
    target = m.apply(x)
    sol = solve_in_span(target, m)
    assert sol is not None and m.apply(sol) == target


def test_rank_of_vectors():
    assert rank_of_vectors([[1, 0], [0, 1], [1, 1]], 2) == 2
