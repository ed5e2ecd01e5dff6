from fractions import Fraction

import pytest

from rootloci.equivariant import chern
from rootloci.partition import Partition, hilbert_degree, partitions
from rootloci.poly import U, V, BiForm, SymForm, divided_difference, exact_div, swap, to_sym
from rootloci.thom import (METHODS, check_relations_even, e3_D, kirwan_product, pi_form,
                           pi_j, projective_degree, thom_polynomial, tp_e3, tp_e3_j2,
                           tp_kirwan, tp_naive, tp_power_block, tp_reduce, tp_sum,
                           tp_two_block)

SPOT = [
    ((2,), "2*c1"),
    ((2, 1), "6*c1"),
    ((3,), "6*c1^2 + 3*c2"),
    ((2, 2), "12*c1^2 + 16*c2"),
    ((3, 1, 1, 1), "120*c1^2 - 48*c2"),
    ((1, 1, 1), "1"),
    ((1,) * 5, "1"),
]


@pytest.mark.parametrize("parts,expected", SPOT)
@pytest.mark.parametrize("method", sorted(METHODS))
def test_spot_values(parts, expected, method):
    assert str(thom_polynomial(Partition(parts), method)) == expected


def test_unknown_method():
    with pytest.raises(ValueError):
        thom_polynomial(Partition((2,)), "fast")


@pytest.mark.parametrize("d", range(1, 9))
def test_three_way_and_invariants(d):
    for lam in partitions(d):
        a, b, c = tp_reduce(lam), tp_naive(lam), tp_sum(lam)
        assert a.value == b.value == c.value
        assert a.value.is_integral()
        assert a.value.is_zero() or a.value.degree == lam.codim
        assert swap(a.biform) == a.biform
        assert projective_degree(a) == hilbert_degree(lam)


def test_sum_worked_example():
    # lambda = (2,1): C4/(3u) - C4/(2u+v) - C4/(u+2v) + C4/(3v) = 6(u-v)^2(u+v)
    C4 = chern(3, 4)
    assert C4 == U * V * (U + V * 2) * (U * 2 + V) * 9
    total = (exact_div(C4, U * 3) - exact_div(C4, U * 2 + V)
             - exact_div(C4, U + V * 2) + exact_div(C4, V * 3))
    assert total == (U - V) ** 2 * (U + V) * 6


def test_power_block_examples():
    assert tp_power_block(2, 1).biform == (U + V) * 2
    assert tp_power_block(3, 1).biform == (U + V * 2) * (U * 2 + V) * 3
    assert str(tp_power_block(1, 7)) == "1"


def test_power_block_matches_reduce():
    for d in range(1, 13):
        for i in range(1, d + 1):
            if d % i == 0:
                e = d // i
                assert tp_power_block(i, e).value == tp_reduce(Partition((i,) * e)).value


def test_two_block_examples():
    assert str(tp_two_block(1, 1, 2, 1)) == "6*c1"
    assert str(tp_two_block(1, 3, 3, 1)) == "120*c1^2 - 48*c2"
    with pytest.raises(ValueError):
        tp_two_block(2, 1, 2, 1)


def test_kirwan_examples():
    assert kirwan_product(1, 2) == U * U * 6 + U * V * 3
    assert str(tp_kirwan(1, 2)) == "6*c1"
    assert kirwan_product(3, 3) == U * (U * 5 + V) * (U * 2 + V) * 12
    tp = tp_kirwan(3, 3)
    assert tp.biform == BiForm([120, 192, 120])
    assert projective_degree(tp) == 12
    with pytest.raises(ValueError):
        tp_kirwan(0, 3)


def test_pi_forms():
    assert pi_form(6) == U * (U * 5 + V) * (U * 2 + V) * 12
    assert pi_form(5).degree == 3
    assert pi_j(7, 0) == BiForm.const(1)
    assert pi_j(7, 1) == U * 7


def test_e3_bracket_vanishes_on_diagonal():
    for h in range(3, 7):
        d = 2 * h
        for j in range(2, h):
            upper = BiForm.const(1)
            lower = BiForm.const(1)
            for l in range(h - j + 1, h + 1):
                upper = upper * BiForm.linear(l, d - l)
            for l in range(j):
                lower = lower * BiForm.linear(l, d - l)
            assert (upper - lower).evaluate(1, 1) == 0
            assert e3_D(h, j).degree == j - 1


def test_e3_matches_reduce():
    for h in range(3, 7):
        for j in range(2, h):
            lam = Partition((1,) * (h - j) + (j, h))
            assert tp_e3(h, j).value == tp_reduce(lam).value
        assert tp_e3_j2(h).value == tp_e3(h, 2).value


def test_e3_preconditions():
    with pytest.raises(ValueError):
        tp_e3(2, 2)
    with pytest.raises(ValueError):
        tp_e3(4, 4)


@pytest.mark.parametrize("h", [3, 4, 5])
def test_relations(h):
    rep = check_relations_even(h)
    assert rep.ok, rep.failures


def test_relations_zero_difference():
    h = 3
    tp = lambda parts: tp_reduce(Partition(parts)).value  # noqa: E731
    c1 = SymForm.c1()
    l0, l1 = tp((1,) * h + (h,)), tp((1,) * (h - 1) + (h + 1,))
    assert (l1 - c1 * l0 * h).is_zero()


def test_projective_degree_examples():
    assert projective_degree(tp_reduce(Partition((2,)))) == 2
    assert projective_degree(tp_reduce(Partition((2, 1)))) == 4
    assert projective_degree(tp_reduce(Partition((1, 1, 1, 1)))) == 1


def test_discriminant_is_divided_difference_product():
    # lambda = (2, 1^{d-2}) is the discriminant hypersurface, degree 2(d-1)
    for d in range(2, 9):
        tp = tp_reduce(Partition((2,) + (1,) * (d - 2)))
        assert tp.value.degree == 1
        assert tp.value.coeffs[0] == Fraction(d * (d - 1))
