from fractions import Fraction

import pytest
from hypothesis import given

from rootloci.poly import (ONE, U, V, BiForm, InexactDivision, NotSymmetric, SymForm,
                           divided_difference, evaluate, exact_div, from_sym,
                           gcd_homogeneous, swap, to_sym)

from strategies import biforms, nonzero_biforms

c1 = SymForm.c1()
c2 = SymForm.c2()


def test_mul_and_pow():
    assert (U + V) * (U - V) == U ** 2 - V ** 2
    assert (U + V) ** 2 == U ** 2 + U * V * 2 + V ** 2
    assert to_sym(U + V) == c1


def test_swap_examples():
    assert swap(U) == V
    assert swap(U ** 2 + U * V * 3) == V ** 2 + U * V * 3


def test_divided_difference_examples():
    assert divided_difference(U ** 2) == U + V
    assert divided_difference(U * V).is_zero()
    assert to_sym(divided_difference(U ** 3)) == c1 * c1 - c2


def test_exact_div_examples():
    assert exact_div(U ** 2 - V ** 2, U - V) == U + V
    assert exact_div((U + V) ** 2, U + V) == U + V
    num = (U ** 3 - U ** 2 * V - U * V ** 2 + V ** 3) * 6
    assert exact_div(num, (U - V) ** 2) == (U + V) * 6


def test_exact_div_remainder_raises():
    with pytest.raises(InexactDivision):
        exact_div(U ** 2 + V ** 2, U - V)


def test_to_sym_examples():
    assert to_sym((U + V) ** 2) == c1 * c1
    assert str(to_sym(BiForm([120, 192, 120]))) == "120*c1^2 - 48*c2"
    assert from_sym(c2) == U * V


def test_to_sym_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        to_sym(U)


def test_gcd_examples():
    assert gcd_homogeneous(U ** 2, U ** 3 + U ** 2 * V) == U ** 2
    pi = U * (U * 5 + V) * (U * 2 + V) * 12
    assert gcd_homogeneous(pi, swap(pi)) == ONE
    assert gcd_homogeneous(U + V, U - V) == ONE


def test_evaluate_examples():
    h = Fraction(1, 2)
    assert evaluate(U + V, h, h) == 1
    assert evaluate((U + V) * 2, h, h) == 2
    assert evaluate(U * V, 1, 0) == 0


def test_rendering():
    assert str(BiForm([120, 192, 120])) == "120*u^2 + 192*u*v + 120*v^2"
    assert str(BiForm.zero()) == "0"
    assert str(U - V * Fraction(1, 2)) == "u - 1/2*v"
    assert str(SymForm.monomial(0, 0)) == "1"


def test_degree_mismatch_add():
    with pytest.raises(ValueError):
        U + U * V


@given(biforms(), biforms())
def test_leibniz(a, b):
    # d(AB) = B* dA + A dB
    assert divided_difference(a * b) == swap(b) * divided_difference(a) + a * divided_difference(b)


@given(biforms())
def test_swap_involution(a):
    assert swap(swap(a)) == a


@given(biforms())
def test_divided_difference_defining_identity(a):
    da = divided_difference(a)
    assert (U - V) * da == a - swap(a)
    if a.degree >= 1 and not da.is_zero():
        assert da.degree == a.degree - 1
    assert da.is_symmetric()


@given(biforms())
def test_symmetrization_round_trip(a):
    s = a + swap(a)
    assert from_sym(to_sym(s)) == s


@given(nonzero_biforms(), nonzero_biforms())
def test_exact_div_inverts_mul(a, b):
    assert exact_div(a * b, b) == a


@given(nonzero_biforms(4), nonzero_biforms(4), nonzero_biforms(3))
def test_gcd_divides_both(a, b, c):
    g = gcd_homogeneous(a * c, b * c)
    exact_div(a * c, g)
    exact_div(b * c, g)
    # the common factor c divides the gcd
    exact_div(g, c)
