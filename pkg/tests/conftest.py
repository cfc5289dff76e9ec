"""Shared strategies and helpers for the test suite."""

from fractions import Fraction

import hypothesis.strategies as st

from tiltwall import NumClass, ParamPoint, class_of_line_bundle


def lattice_class(coeffs) -> NumClass:
    """Integral class from integer coefficients on the line-bundle basis
    O(-1), O, O(1), O(2) (a unimodular basis of the lattice)."""
    a, b, c, d = coeffs
    return (a * class_of_line_bundle(-1) + b * class_of_line_bundle(0)
            + c * class_of_line_bundle(1) + d * class_of_line_bundle(2))


small_ints = st.integers(min_value=-4, max_value=4)

integral_classes = st.tuples(small_ints, small_ints, small_ints, small_ints).filter(
    lambda t: any(t)).map(lattice_class)

small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=12)


@st.composite
def points_in_U(draw):
    beta = draw(small_rationals)
    bump = draw(st.fractions(min_value=Fraction(1, 12), max_value=3,
                             max_denominator=12))
    return ParamPoint(beta, beta * beta / 2 + bump)
