from __future__ import annotations

import math
import threading
import time
from fractions import Fraction

import pytest
import sympy
from scipy.integrate import quad

from wpvol.polyring import PolynomialError
from wpvol.recursion import (VolumeCache, compute_volume, eval_D, eval_H, eval_R, kernel_F,
                             quad_check_F, recursion_rhs, transform_boundary, transform_double)
from wpvol.reference import KERNEL_TABLE, WORKED_RHS_1_2


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_kernel_matches_published_polynomials(k):
    assert sorted(kernel_F(k).terms()) == sorted(KERNEL_TABLE[k])


@pytest.mark.parametrize("k,t", [(1, 0.0), (2, 1.5), (3, 0.7), (5, 2.0)])
def test_kernel_against_scipy_quadrature(k, t):
    # independent of the mpmath route used in quad_check_F
    val, _ = quad(lambda x: x ** (2 * k - 1) * eval_H(x, t), 0, 200, limit=400)
    assert math.isclose(val, kernel_F(k).evaluate(t), rel_tol=1e-8)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("t", [0, 1, 2])
def test_quad_check(k, t):
    rep = quad_check_F(k, t, 1e-6)
    assert rep.passed, rep


def test_quad_check_argument_errors():
    with pytest.raises(ValueError):
        quad_check_F(1, 0.0, tol=0)
    with pytest.raises(ValueError):
        kernel_F(0)


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (2, 3)])
def test_double_transform_beta_factor(a, b):
    x, u = sympy.symbols("x u", positive=True)
    beta = sympy.integrate(x ** (2 * a + 1) * (u - x) ** (2 * b + 1), (x, 0, u)) / u ** (2 * a + 2 * b + 3)
    factor = Fraction(str(sympy.nsimplify(beta)))
    F = kernel_F(a + b + 2)
    assert sorted(transform_double(a, b)) == sorted((pe, te // 2, factor * c) for te, pe, c in F.terms())


@pytest.mark.parametrize("a", [0, 1, 2])
def test_boundary_transform_symbolic(a):
    s, d, P = sympy.symbols("s d P")
    F = sum(sympy.Rational(c.numerator, c.denominator) * P ** pe * s ** te for te, pe, c in kernel_F(a + 1).terms())
    expr = sympy.expand(F.subs(s, s + d) + F.subs(s, s - d))
    ours = sum(sympy.Rational(c.numerator, c.denominator) * P ** pe * s ** (2 * i) * d ** (2 * j)
               for pe, i, j, c in transform_boundary(a))
    assert sympy.expand(expr - ours) == 0


def test_worked_rhs_1_2():
    assert dict(recursion_rhs(1, 2, VolumeCache()).terms) == WORKED_RHS_1_2


def test_base_cases(cache):
    assert compute_volume(0, 3, cache).to_human() == "1"
    assert compute_volume(1, 1, cache).to_human() == "1/48 m_(1) + π²/12"
    assert compute_volume(0, 4, cache).to_human() == "1/2 m_(1) + 2π²"


@pytest.mark.parametrize("g,n", [(0, 2), (1, 0), (2, 0), (-1, 3)])
def test_compute_rejects(g, n):
    with pytest.raises(PolynomialError):
        compute_volume(g, n, VolumeCache())


def test_top_genus_runtime():
    t0 = time.perf_counter()
    V = compute_volume(5, 1, VolumeCache())
    assert time.perf_counter() - t0 < 60
    assert V.at_zero() == (Fraction(21185241498983729441, 2824576634880000), 13)


def test_cache_is_deterministic_under_threads():
    shared = VolumeCache()
    results = []

    def work():
        results.append(compute_volume(2, 2, shared).to_dict())

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
    assert compute_volume(2, 2, VolumeCache()).to_dict() == results[0]


def test_cache_rejects_bad_insert():
    from wpvol.polyring import VolumePolynomial
    with pytest.raises(PolynomialError):
        VolumeCache().insert(1, 1, VolumePolynomial({(0, 0): 1}, 1))


@pytest.mark.parametrize("y,z", [(0.5, 0.3), (2.0, 1.0), (4.0, 3.5)])
def test_D_and_R_boundary_values(y, z):
    assert abs(eval_D(0.0, y, z)) < 1e-12
    assert abs(eval_R(1.3, y, 0.0) - 1.3) < 1e-12


@pytest.mark.parametrize("x,y,z", [(1.0, 0.5, 0.3), (2.5, 1.0, 2.0)])
def test_D_derivative_is_H(x, y, z):
    h = 1e-5
    deriv = (eval_D(x + h, y, z) - eval_D(x - h, y, z)) / (2 * h)
    assert math.isclose(deriv, eval_H(y + z, x), rel_tol=1e-6)
