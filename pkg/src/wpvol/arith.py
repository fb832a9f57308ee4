"""
Exact rational arithmetic and the number-theoretic constants feeding the kernels.

Rationals are :class:`fractions.Fraction` throughout; they are canonical
(reduced, positive denominator) by construction, so equal values compare and
hash identically.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import List, Union

__all__ = ["Q", "as_rational", "rational_div", "bernoulli", "zeta_even_coeff", "double_factorial"]

Q = Fraction

RationalLike = Union[int, Fraction, str]


def as_rational(x: RationalLike) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction.

    Floats are rejected: they would smuggle rounding into the exact core.
    """
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(x)


def rational_div(a: RationalLike, b: RationalLike) -> Fraction:
    b = as_rational(b)
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return as_rational(a) / b


_bernoulli_table: List[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m with B_1 = -1/2.

    Uses sum_{k=0}^{m} C(m+1, k) B_k = 0 and memoizes every value computed.
    """
    if m < 0:
        raise ValueError("bernoulli index must be non-negative")
    table = _bernoulli_table
    if m < len(table):
        return table[m]
    with _bernoulli_lock:
        while len(table) <= m:
            j = len(table)
            s = sum(comb(j + 1, k) * table[k] for k in range(j))
            table.append(-s / (j + 1))
    return table[m]


def zeta_even_coeff(i: int) -> Fraction:
    """Rational q with zeta(2i) = q * pi^(2i).

    For i >= 1 this is (-1)^(i+1) B_{2i} 2^(2i-1) / (2i)!; for i = 0 it is
    zeta(0) = -1/2.
    """
    if i < 0:
        raise ValueError("zeta index must be non-negative")
    if i == 0:
        return Fraction(-1, 2)
    b = bernoulli(2 * i)
    sign = 1 if i % 2 == 1 else -1
    num = sign * b * 2 ** (2 * i - 1)
    den = 1
    for k in range(2, 2 * i + 1):
        den *= k
    return num / den


def double_factorial(k: int) -> int:
    """k!! with the conventions (-1)!! = 0!! = 1."""
    if k < -1:
        raise ValueError("double factorial undefined below -1")
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out
