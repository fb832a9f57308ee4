from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wpvol.polyring import (PolynomialError, VolumePolynomial, check_stable, eval_numeric,
                            from_monomial_symmetric, substitute_2pi_i)

N = 2

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=12)
monomials = st.tuples(*[st.integers(0, 3)] * (N + 1))
polys = st.dictionaries(monomials, fractions, max_size=6).map(lambda d: VolumePolynomial(d, N))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == VolumePolynomial.zero(N)
    assert a * 1 == a


@given(polys)
def test_integrate_then_differentiate(a):
    # d/dL (int L P dL) = L P, which in x-form is 2 x d/dx undoing x^a -> x^(a+1)/(2a+2)
    b = a.integrate_L(1)
    assert b.derivative_x(1) * 2 == a


@given(polys, st.lists(st.floats(0.1, 3.0), min_size=N, max_size=N))
def test_numeric_evaluation_is_a_homomorphism(a, L):
    b = a * a + a
    va = eval_numeric(a, L)
    assert math.isclose(eval_numeric(b, L), va * va + va, rel_tol=1e-9, abs_tol=1e-9)


@given(polys)
def test_serialization_round_trip(a):
    assert VolumePolynomial.from_dict(a.to_dict()) == a


@given(polys)
def test_symmetrization_is_symmetric(a):
    s = a + a.permute([2, 1])
    assert s.symmetry_violation() is None
    assert from_monomial_symmetric(s.to_monomial_symmetric(), N) == s


@given(polys)
def test_coefficients_stay_exact(a):
    assert all(isinstance(c, Fraction) for c in (a * a).terms.values())


def test_substitute_2pi_i_is_x_to_minus_4p():
    x = VolumePolynomial.x(1, 1)
    assert substitute_2pi_i(x * x, 1) == VolumePolynomial({(2,): 16}, 0)


def test_human_rendering_worked_example():
    V = from_monomial_symmetric([((2,), Fraction(1, 192), 0), ((1, 1), Fraction(1, 96), 0),
                                 ((1,), Fraction(1, 12), 1), ((), Fraction(1, 4), 2)], 2, 1)
    assert V.to_human() == "1/192 m_(2) + 1/96 m_(1,1) + π²/12 m_(1) + π⁴/4"


def test_mismatched_variable_counts():
    with pytest.raises(PolynomialError):
        VolumePolynomial.x(1, 1) + VolumePolynomial.x(1, 2)


def test_rejects_float_coefficients():
    with pytest.raises(TypeError):
        VolumePolynomial({(0, 0): 0.5}, 1)


def test_invariant_violations_are_reported():
    bad = VolumePolynomial({(0, 1, 0, 0, 0): 1}, 4)
    with pytest.raises(PolynomialError, match="symmetric"):
        bad.check_volume_invariants(0, 4)
    neg = VolumePolynomial({(1, 0): -1}, 1)
    with pytest.raises(PolynomialError, match="negative"):
        neg.check_volume_invariants(1, 1)
    inhom = VolumePolynomial({(0, 0): 1}, 1)
    with pytest.raises(PolynomialError, match="homogeneous"):
        inhom.check_volume_invariants(1, 1)


@pytest.mark.parametrize("g,n", [(0, 2), (1, 0), (0, 0), (-1, 5)])
def test_unstable_pairs_rejected(g, n):
    with pytest.raises(PolynomialError):
        check_stable(g, n)


def test_euler_operator():
    x = VolumePolynomial.x(1, 2)
    y = VolumePolynomial.x(2, 2)
    p = VolumePolynomial.p(2)
    assert (x * y + p).euler_x() == x * y * 4
