from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from wpvol.arith import as_rational, bernoulli, double_factorial, rational_div, zeta_even_coeff


def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(3) == 0


@pytest.mark.parametrize("m", range(2, 41, 2))
def test_bernoulli_matches_sympy(m):
    assert bernoulli(m) == Fraction(str(sympy.bernoulli(m)))


@pytest.mark.parametrize("i", range(1, 12))
def test_zeta_even_matches_sympy(i):
    expected = sympy.nsimplify(sympy.zeta(2 * i) / sympy.pi ** (2 * i))
    assert zeta_even_coeff(i) == Fraction(str(expected))


def test_zeta_zero_convention():
    assert zeta_even_coeff(0) == Fraction(-1, 2)


def test_zeta_two_and_four():
    assert zeta_even_coeff(1) == Fraction(1, 6)
    assert zeta_even_coeff(2) == Fraction(1, 90)


def test_double_factorial():
    assert [double_factorial(k) for k in range(-1, 8)] == [1, 1, 1, 2, 3, 8, 15, 48, 105]


def test_rejects_floats_and_zero_division():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(ZeroDivisionError):
        rational_div(1, 0)


@given(st.integers(0, 60))
def test_odd_bernoulli_vanish(k):
    m = 2 * k + 3
    assert bernoulli(m) == 0


@given(st.integers(1, 30))
def test_zeta_even_positive(i):
    assert zeta_even_coeff(i) > 0
