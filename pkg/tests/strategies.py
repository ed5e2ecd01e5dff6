"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from rootloci.poly import BiForm

small_rationals = st.builds(
    Fraction, st.integers(-20, 20), st.integers(1, 6))


@st.composite
def biforms(draw, max_degree=8, degree=None):
    m = draw(st.integers(0, max_degree)) if degree is None else degree
    coeffs = draw(st.lists(small_rationals, min_size=m + 1, max_size=m + 1))
    return BiForm(coeffs)


@st.composite
def nonzero_biforms(draw, max_degree=6):
    b = draw(biforms(max_degree))
    if b.is_zero():
        return BiForm.const(1)
    return b
