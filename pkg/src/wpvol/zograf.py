"""Zograf's recursion for the genus-zero constants V_{0,n}(0)."""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import List, Optional

from .recursion import VolumeCache, compute_volume, default_cache
from .reports import FAIL, PASS, CheckReport

__all__ = ["zograf_a", "zograf_constant", "check_zograf"]

_values: List[Fraction] = [Fraction(0), Fraction(0), Fraction(0), Fraction(1)]  # index n, a_3 = 1
_lock = threading.Lock()


def zograf_a(n: int) -> Fraction:
    """a_n = 1/2 sum_{k=1}^{n-3} k(n-k-2)/(n-1) C(n-4,k-1) C(n,k+1) a_{k+2} a_{n-k}."""
    if n < 3:
        raise ValueError(f"a_n is defined for n >= 3, got {n}")
    with _lock:
        while len(_values) <= n:
            m = len(_values)
            total = Fraction(0)
            for k in range(1, m - 2):
                total += (Fraction(k * (m - k - 2), m - 1) * math.comb(m - 4, k - 1) * math.comb(m, k + 1)
                          * _values[k + 2] * _values[m - k])
            _values.append(total / 2)
        return _values[n]


def zograf_constant(n: int) -> Fraction:
    """Coefficient of p^(n-3) in (2 pi^2)^(n-3) a_n / (n-3)!."""
    return Fraction(2 ** (n - 3), math.factorial(n - 3)) * zograf_a(n)


def check_zograf(n: int, cache: Optional[VolumeCache] = None) -> CheckReport:
    if n < 4:
        raise ValueError("the comparison starts at n = 4")
    V = compute_volume(0, n, cache if cache is not None else default_cache())
    c, d = V.at_zero()
    expected = zograf_constant(n)
    ok = c == expected and d == n - 3
    return CheckReport(f"Zograf n={n}", PASS if ok else FAIL,
                       "" if ok else f"V(0) = {c} p^{d}, recursion gives {expected} p^{n - 3}",
                       {"n": n, "a_n": str(zograf_a(n))})
