"""
Correlator table and the constraints on F(t) = sum_d <tau^d> t^d / d!.

F is never built.  The coefficient of t^e/e! in d_{a_1}...d_{a_k} F is the
correlator <tau_{a_1} ... tau_{a_k} tau^e>, and for a product of two series

    [t^e/e!] (A B) = sum_{e' <= e} prod_i C(e_i, e'_i) A_{e'} B_{e-e'},

so every PDE or operator identity reduces to a finite sum over the table.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .arith import double_factorial
from .intersection import correlator
from .recursion import VolumeCache, default_cache
from .reports import FAIL, INCONCLUSIVE, PASS, CheckReport

__all__ = [
    "MissingCorrelator",
    "CorrelatorTable",
    "build_table",
    "counts_to_alpha",
    "alpha_to_counts",
    "check_correlator_string_dilaton",
    "check_kdv_pde",
    "check_virasoro",
    "virasoro_constant",
    "kdv_cases",
    "virasoro_cases",
]

Counts = Tuple[int, ...]


class MissingCorrelator(LookupError):
    """A correlator above the table's level was requested."""


def _trim(d: Sequence[int]) -> Counts:
    d = list(d)
    while d and d[-1] == 0:
        d.pop()
    return tuple(d)


def alpha_to_counts(alpha: Sequence[int]) -> Counts:
    """(2,0,0) -> (2,0,1): multiplicity of tau_i at index i."""
    if not alpha:
        return ()
    d = [0] * (max(alpha) + 1)
    for a in alpha:
        if a < 0:
            raise ValueError("negative tau index")
        d[a] += 1
    return tuple(d)


def counts_to_alpha(d: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted((i for i, c in enumerate(d) for _ in range(c)), reverse=True))


def _add(d: Sequence[int], idx: Sequence[int]) -> Counts:
    out = list(d) + [0] * max(0, max(idx, default=-1) + 1 - len(d))
    for i in idx:
        out[i] += 1
    return _trim(out)


def _implied_genus(d: Sequence[int]) -> Optional[int]:
    n = sum(d)
    weight = sum(i * c for i, c in enumerate(d))
    num = weight - n + 3
    if n == 0 or num < 0 or num % 3:
        return None
    g = num // 3
    return g if 2 * g - 2 + n > 0 else None


@dataclass
class CorrelatorTable:
    """All <tau^d> with 3g-3+n <= max_level; anything else is zero or missing."""
    max_level: int
    values: Dict[Counts, Fraction] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.values)

    def get(self, d: Sequence[int]) -> Fraction:
        d = _trim(d)
        if any(c < 0 for c in d):
            return Fraction(0)
        if _implied_genus(d) is None:
            return Fraction(0)
        level = sum(i * c for i, c in enumerate(d))
        if level > self.max_level:
            raise MissingCorrelator(counts_to_alpha(d))
        return self.values.get(d, Fraction(0))

    def deriv(self, idx: Sequence[int], e: Sequence[int]) -> Fraction:
        """[t^e/e!] d_{idx} F."""
        return self.get(_add(e, idx))

    def product(self, left: Sequence[int], right: Sequence[int], e: Sequence[int]) -> Fraction:
        """[t^e/e!] (d_left F)(d_right F)."""
        total = Fraction(0)
        for sub in product(*(range(c + 1) for c in e)):
            a = self.deriv(left, sub)
            if not a:
                continue
            rest = tuple(c - s for c, s in zip(e, sub))
            b = self.deriv(right, rest)
            if b:
                total += math.prod(math.comb(c, s) for c, s in zip(e, sub)) * a * b
        return total

    def correlator(self, alpha: Sequence[int]) -> Fraction:
        return self.get(alpha_to_counts(alpha))


def build_table(max_level: int = 6, cache: Optional[VolumeCache] = None) -> CorrelatorTable:
    if max_level < 0:
        raise ValueError("max_level must be non-negative")
    cache = cache if cache is not None else default_cache()
    table = CorrelatorTable(max_level)
    for g in range(max_level // 3 + 2):
        for n in range(1, max_level - 3 * g + 4):
            if 2 * g - 2 + n <= 0:
                continue
            dim = 3 * g - 3 + n
            for alpha in _partitions_into(dim, n):
                value = correlator(g, alpha, cache)
                if value:
                    table.values[alpha_to_counts(alpha)] = value
    return table


def _partitions_into(total: int, parts: int, cap: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Non-increasing tuples of `parts` non-negative integers summing to `total`."""
    cap = total if cap is None else cap
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, cap), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions_into(total - first, parts - 1, first):
            yield (first,) + rest


def _report(name: str, lhs, rhs, params: dict) -> CheckReport:
    ok = lhs == rhs
    return CheckReport(name, PASS if ok else FAIL, "" if ok else f"{lhs} != {rhs}", params)


def check_correlator_string_dilaton(table: CorrelatorTable) -> List[CheckReport]:
    """String and dilaton for every stored correlator containing tau_0 or tau_1."""
    reports = []
    for d in sorted(table.values):
        alpha = counts_to_alpha(d)
        g = _implied_genus(d)
        if 0 in alpha:
            rest = list(alpha)
            rest.remove(0)
            if 2 * g - 2 + len(rest) > 0:
                rhs = Fraction(0)
                for k, a in enumerate(rest):
                    if a > 0:
                        rhs += table.correlator(rest[:k] + [a - 1] + rest[k + 1:])
                reports.append(_report(f"string <{alpha}>", table.get(d), rhs, {"alpha": list(alpha)}))
        if 1 in alpha:
            rest = list(alpha)
            rest.remove(1)
            if rest and 2 * g - 2 + len(rest) > 0:
                rhs = (2 * g - 2 + len(rest)) * table.correlator(rest)
                reports.append(_report(f"dilaton <{alpha}>", table.get(d), rhs, {"alpha": list(alpha)}))
    return reports


def check_kdv_pde(n: int, monomial: Sequence[int], table: CorrelatorTable) -> CheckReport:
    """Coefficient of t^e/e! in the Witten-Kontsevich equation for t_n (n >= 1)."""
    if n < 1:
        raise ValueError("the KdV equation involves t_{n-1}; need n >= 1")
    e = _trim(monomial)
    params = {"n": n, "monomial": list(e)}
    name = f"KdV n={n} e={list(e)}"
    try:
        lhs = (2 * n + 1) * table.deriv((n, 0, 0), e)
        rhs = (table.product((n - 1, 0), (0, 0, 0), e)
               + 2 * table.product((n - 1, 0, 0), (0, 0), e)
               + Fraction(1, 4) * table.deriv((n - 1, 0, 0, 0, 0), e))
    except MissingCorrelator as exc:
        return CheckReport(name, INCONCLUSIVE, f"correlator {exc.args[0]} above max_level", params)
    return _report(name, lhs, rhs, params)


# The dilaton constant of L_0 must be 1/16 for <tau_1> = 1/24 to satisfy
# L_0 exp F = 0 at t = 0: -3/2 * 1/24 + c = 0.
L0_CONSTANT = Fraction(1, 16)


def virasoro_constant(n: int, e: Counts) -> Fraction:
    """[t^e/e!] of the multiplication part of L_n."""
    if n == -1 and e == (2,):
        return Fraction(1, 2)  # t_0^2/4 = (1/2) t_0^2/2!
    if n == 0 and e == ():
        return L0_CONSTANT
    return Fraction(0)


def check_virasoro(n: int, monomial: Sequence[int], table: CorrelatorTable) -> CheckReport:
    """[t^e/e!] of exp(-F) L_n exp(F), which must vanish."""
    if n < -1:
        raise ValueError("Virasoro operators L_n need n >= -1")
    e = _trim(monomial)
    params = {"n": n, "monomial": list(e)}
    name = f"Virasoro L_{n} e={list(e)}"
    try:
        total = -Fraction(double_factorial(2 * n + 3), 2) * table.deriv((n + 1,), e)
        for k, c in enumerate(e):
            if c and n + k >= 0:
                lowered = list(e)
                lowered[k] -= 1
                coef = Fraction(double_factorial(2 * k + 2 * n + 1), 2 * double_factorial(2 * k - 1))
                total += coef * c * table.deriv((n + k,), lowered)
        for i in range(n):
            j = n - 1 - i
            coef = Fraction(double_factorial(2 * i + 1) * double_factorial(2 * j + 1), 4)
            total += coef * (table.deriv((i, j), e) + table.product((i,), (j,), e))
        total += virasoro_constant(n, e)
    except MissingCorrelator as exc:
        return CheckReport(name, INCONCLUSIVE, f"correlator {exc.args[0]} above max_level", params)
    return _report(name, total, Fraction(0), params)


def _monomials(max_weight: int, max_count: int, width: int) -> Iterator[Counts]:
    """Exponent vectors e over t_0..t_{width-1} with sum i*e_i <= max_weight, sum e_i <= max_count."""
    def rec(i, weight_left, count_left):
        if i == width:
            yield ()
            return
        top = count_left if i == 0 else min(count_left, weight_left // i)
        for c in range(top + 1):
            for rest in rec(i + 1, weight_left - i * c, count_left - c):
                yield (c,) + rest
    seen = set()
    for e in rec(0, max_weight, max_count):
        t = _trim(e)
        if t not in seen:
            seen.add(t)
            yield t


def kdv_cases(max_level: int) -> Iterator[Tuple[int, Counts]]:
    """(n, e) with every correlator in the KdV coefficient at level <= max_level."""
    for n in range(1, max_level + 1):
        for e in _monomials(max_level - n, max_level + 1, max_level + 1):
            yield n, e


def virasoro_cases(max_level: int, orders: Sequence[int] = (-1, 0, 1, 2)) -> Iterator[Tuple[int, Counts]]:
    for n in orders:
        if n + 1 > max_level:
            continue
        for e in _monomials(max_level - n - 1, max_level + 2, max_level + 1):
            yield n, e
