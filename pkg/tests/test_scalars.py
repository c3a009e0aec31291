from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from opalg.scalars import HBAR, HbarScalar, I, INV_I_HBAR, I_HBAR, ONE, ZERO

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
scalars = st.builds(
    HbarScalar, rationals, rationals, st.integers(min_value=-3, max_value=3)
)


def test_zero_is_grade_normalized():
    assert HbarScalar.of(0, 0, 5) == ZERO
    assert HbarScalar.of(0, 0, -2).hbar_power == 0
    assert ZERO.is_zero


def test_addition_requires_equal_grade():
    with pytest.raises(ValueError):
        HBAR + ONE
    assert HBAR + ZERO == HBAR
    assert ZERO + HBAR == HBAR
    assert HBAR + (-HBAR) == ZERO


def test_products_add_grades():
    assert (HBAR * HBAR).hbar_power == 2
    assert (INV_I_HBAR * I_HBAR) == ONE
    assert I * I == -ONE
    assert HbarScalar.of(0, 1, 1) * HbarScalar.of(0, 1, 1) == HbarScalar.of(-1, 0, 2)


def test_rational_coercion_and_exactness():
    third = HbarScalar.real(Fraction(1, 3))
    assert third + third + third == ONE
    assert (third * 3) == ONE
    assert 2 * third == HbarScalar.real(Fraction(2, 3))


def test_division_is_exact_complex_division():
    a = HbarScalar.of(Fraction(3, 2), Fraction(-1, 2), 2)
    b = HbarScalar.of(1, 2, 1)
    assert (a / b) * b == a
    assert ONE / I == -I
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_conjugate_keeps_grade():
    assert I_HBAR.conjugate() == HbarScalar.of(0, -1, 1)
    assert HBAR.conjugate() == HBAR


def test_inv_i_hbar_is_the_bracket_prefactor():
    assert INV_I_HBAR * I_HBAR == ONE
    assert INV_I_HBAR.hbar_power == -1


@given(scalars, scalars)
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@given(scalars, scalars, scalars)
def test_multiplication_associates_and_distributes_same_grade(a, b, c):
    assert (a * b) * c == a * (b * c)
    # distributivity within a single grade
    b_same = HbarScalar(c.re + 1, c.im, c.hbar_power)
    assert a * (c + b_same) == a * c + a * b_same


@given(scalars)
def test_conjugation_is_an_involution(a):
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).im == 0
