from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from tiltwall import (NumClass, POINT, class_of_line_bundle, class_of_named,
                      dual_shifted, is_integral_class, shift, tensor_line)
from tiltwall.errors import InputError

from conftest import integral_classes

Q = Fraction


def test_line_bundle_classes():
    assert class_of_line_bundle(0) == NumClass(1, 0, 0, 0)
    assert class_of_line_bundle(1) == NumClass(1, 1, Q(1, 2), Q(1, 6))
    assert class_of_line_bundle(-1) == NumClass(1, -1, Q(1, 2), Q(-1, 6))


def test_named_classes():
    assert class_of_named("T(-2)") == NumClass(3, -2, 0, Q(2, 3))
    assert class_of_named("Omega(1)") == NumClass(3, -1, Q(-1, 2), Q(-1, 6))
    assert class_of_named("point") == NumClass(0, 0, 0, 1)
    assert class_of_named("Omega2(2)") == class_of_named("T(-2)")
    assert class_of_named("O^x") == class_of_line_bundle(0) - POINT
    assert class_of_named("O^x") == NumClass(1, 0, 0, -1)
    assert class_of_named("O(-3)") == NumClass(1, -3, Q(9, 2), Q(-9, 2))
    with pytest.raises(InputError):
        class_of_named("F(7)")


def test_shift_examples():
    o = NumClass(1, 0, 0, 0)
    assert shift(o, 1) == NumClass(-1, 0, 0, 0)
    assert shift(o, 2) == o
    assert shift(NumClass(3, -2, 0, Q(2, 3)), 3) == NumClass(-3, 2, 0, Q(-2, 3))


def test_tensor_line_examples():
    assert tensor_line(class_of_line_bundle(0), 1) == class_of_line_bundle(1)
    assert tensor_line(class_of_line_bundle(-1), 1) == NumClass(1, 0, 0, 0)
    assert tensor_line(class_of_named("T(-2)"), 0) == NumClass(3, -2, 0, Q(2, 3))


def test_dual_shifted_examples():
    assert dual_shifted(class_of_line_bundle(2)) == NumClass(-1, 2, -2, Q(8, 6))
    assert dual_shifted(POINT) == POINT
    assert dual_shifted(NumClass(3, -2, 0, Q(2, 3))) == NumClass(-3, -2, 0, Q(2, 3))


def test_group_examples():
    o = class_of_line_bundle(0)
    assert o + o == NumClass(2, 0, 0, 0)
    assert o - POINT == class_of_named("O^x")
    assert o - o == NumClass(0, 0, 0, 0)


def test_integrality_examples():
    for d in range(-5, 6):
        assert is_integral_class(class_of_line_bundle(d))
    assert not is_integral_class(NumClass(0, 0, Q(1, 2), 0))
    # a line class: chi of twists is m + 1
    assert is_integral_class(NumClass(0, 0, 1, -1))
    # not integral: chi of twists is m + 3/2
    assert not is_integral_class(NumClass(0, 0, 1, Q(-1, 2)))


def test_parse_format_roundtrip():
    text = "3,-2,0,2/3"
    assert str(NumClass.parse(text)) == text
    with pytest.raises(InputError):
        NumClass.parse("1,2,3")
    with pytest.raises(InputError):
        NumClass.parse("1,2,3,x")


@given(integral_classes)
def test_integral_lattice_members_are_integral(v):
    assert is_integral_class(v)


@given(integral_classes, st.integers(-3, 3), st.integers(-3, 3))
def test_tensor_line_is_an_action(v, m, n):
    assert tensor_line(tensor_line(v, m), n) == tensor_line(v, m + n)


@given(integral_classes)
def test_dual_shifted_involution(v):
    assert dual_shifted(dual_shifted(v)) == v


@given(integral_classes, st.integers(-3, 3))
def test_dual_shifted_twist_compatibility(v, m):
    assert dual_shifted(tensor_line(v, m)) == tensor_line(dual_shifted(v), -m)
