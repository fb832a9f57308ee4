"""
Mirzakhani's recursion over exact rationals.

The right-hand side of

    2 d/dL_1 (L_1 V_{g,n}) = (non-separating) + (splitting) + (boundary)

is assembled monomial by monomial from the child volumes using the closed
forms of the kernel integrals, then integrated in L_1 and divided by 2 L_1.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, Optional, Tuple

import mpmath
from scipy.special import expit

from .arith import zeta_even_coeff
from .polyring import Monomial, PolynomialError, VolumePolynomial, check_stable

__all__ = [
    "KernelPolynomial",
    "kernel_F",
    "eval_H",
    "eval_D",
    "eval_R",
    "QuadReport",
    "quad_check_F",
    "transform_double",
    "transform_boundary",
    "VolumeCache",
    "compute_volume",
    "recursion_rhs",
    "default_cache",
]


@dataclass(frozen=True)
class KernelPolynomial:
    """F_{2k-1}(t) as {t_exp: rational}; the t^(2k-2i) coefficient carries p^i."""

    k: int
    coeffs: Tuple[Tuple[int, Fraction], ...]

    def p_power(self, t_exp: int) -> int:
        return (2 * self.k - t_exp) // 2

    def terms(self) -> Iterator[Tuple[int, int, Fraction]]:
        """Yield ``(t_exp, p_exp, coefficient)``."""
        for t_exp, c in self.coeffs:
            yield t_exp, self.p_power(t_exp), c

    def coefficient(self, t_exp: int) -> Fraction:
        return dict(self.coeffs).get(t_exp, Fraction(0))

    def evaluate(self, t: float, pi_value: float = math.pi) -> float:
        p = pi_value ** 2
        return sum(float(c) * t ** te * p ** pe for te, pe, c in self.terms())

    def evaluate_mp(self, t) -> mpmath.mpf:
        p = mpmath.pi ** 2
        t = mpmath.mpf(t)
        return mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * t ** te * p ** pe
                           for te, pe, c in self.terms())


@lru_cache(maxsize=None)
def kernel_F(k: int) -> KernelPolynomial:
    """F_{2k-1}(t) = int_0^inf x^(2k-1) H(x, t) dx as an exact even polynomial."""
    if k < 1:
        raise ValueError("kernel index k must be >= 1")
    coeffs = []
    fact_2k1 = math.factorial(2 * k - 1)
    for i in range(k + 1):
        c = zeta_even_coeff(i) * (2 ** (2 * i + 1) - 4) * fact_2k1 / math.factorial(2 * k - 2 * i)
        if c:
            coeffs.append((2 * k - 2 * i, c))
    return KernelPolynomial(k, tuple(coeffs))


# --- numeric kernels ---------------------------------------------------------

def eval_H(x: float, y: float) -> float:
    return float(expit(-(x + y) / 2) + expit(-(x - y) / 2))


def eval_D(x: float, y: float, z: float) -> float:
    s = (y + z) / 2
    return 2 * (float(mpmath.log(mpmath.exp(x / 2) + mpmath.exp(s)))
                - float(mpmath.log(mpmath.exp(-x / 2) + mpmath.exp(s))))


def eval_R(x: float, y: float, z: float) -> float:
    cy = mpmath.cosh(y / 2)
    return float(x - mpmath.log((cy + mpmath.cosh((x + z) / 2)) / (cy + mpmath.cosh((x - z) / 2))))


@dataclass
class QuadReport:
    k: int
    t: float
    numeric: float
    exact: float
    rel_error: float
    tol: float
    upper_limit: float
    quad_error: float
    passed: bool
    message: str = ""


def _tail_bound(k: int, t: float, T: float) -> mpmath.mpf:
    # H(x, t) <= 2 exp(-(x - |t|)/2) for x > |t|, so the tail is bounded by
    # 2 e^{|t|/2} 2^{2k} Gamma(2k, T/2)
    m = 2 * k - 1
    return 2 * mpmath.exp(abs(t) / 2) * mpmath.mpf(2) ** (m + 1) * mpmath.gammainc(m + 1, T / 2)


def quad_check_F(k: int, t: float, tol: float = 1e-6) -> QuadReport:
    """Compare tanh-sinh quadrature of x^(2k-1) H(x, t) on [0, T] with F_{2k-1}(t)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not 1 <= k <= 6:
        raise ValueError("quadrature check supports 1 <= k <= 6")
    with mpmath.workdps(30):
        exact = kernel_F(k).evaluate_mp(t)
        T = 2 * math.log(10 / tol) + abs(t)
        while _tail_bound(k, t, T) > tol / 10 * abs(exact):
            T *= 1.5
        ht = mpmath.mpf(t)

        def integrand(x):
            return x ** (2 * k - 1) * (1 / (1 + mpmath.exp((x + ht) / 2)) + 1 / (1 + mpmath.exp((x - ht) / 2)))

        # split at |t| where the integrand bends
        pts = [0, abs(t), T] if 0 < abs(t) < T else [0, T]
        value, err = mpmath.quad(integrand, pts, error=True)
        rel = abs(value - exact) / abs(exact)
        converged = err <= tol / 10 * abs(exact)
    passed = bool(converged and rel <= tol)
    msg = "" if converged else f"quadrature did not converge: error estimate {float(err):.3g}"
    return QuadReport(k, float(t), float(value), float(exact), float(rel), tol, float(T), float(err), passed, msg)


# --- exact integral transforms ------------------------------------------------

@lru_cache(maxsize=None)
def transform_double(a: int, b: int) -> Tuple[Tuple[int, int, Fraction], ...]:
    """Contribution of a child monomial x^(2a) y^(2b) to the double-integral terms.

    int int xy x^(2a) y^(2b) H(x+y, L_1) dx dy
        = (2a+1)! (2b+1)! / (2a+2b+3)! F_{2a+2b+3}(L_1).

    Returned as ``(p_exp, x1_exp, coefficient)`` triples.
    """
    if a < 0 or b < 0:
        raise ValueError("exponents must be non-negative")
    factor = Fraction(math.factorial(2 * a + 1) * math.factorial(2 * b + 1), math.factorial(2 * a + 2 * b + 3))
    F = kernel_F(a + b + 2)
    return tuple((pe, te // 2, factor * c) for te, pe, c in F.terms())


@lru_cache(maxsize=None)
def transform_boundary(a: int) -> Tuple[Tuple[int, int, int, Fraction], ...]:
    """F_{2a+1}(L_1 + L_k) + F_{2a+1}(L_1 - L_k) expanded in x_1, x_k.

    (s+d)^(2j) + (s-d)^(2j) = 2 sum_m C(2j, 2m) s^(2j-2m) d^(2m).
    Returned as ``(p_exp, x1_exp, xk_exp, coefficient)`` triples.
    """
    if a < 0:
        raise ValueError("exponent must be non-negative")
    out = []
    for te, pe, c in kernel_F(a + 1).terms():
        j = te // 2
        for m in range(j + 1):
            out.append((pe, j - m, m, 2 * c * math.comb(2 * j, 2 * m)))
    return tuple(out)


# --- the recursion -------------------------------------------------------------

def _is_stable(g: int, n: int) -> bool:
    return g >= 0 and n >= 0 and 2 * g - 2 + n > 0


def _base_volume(g: int, n: int) -> Optional[VolumePolynomial]:
    if (g, n) == (0, 3):
        return VolumePolynomial.constant(1, 3, g=0)
    if (g, n) == (1, 1):
        return VolumePolynomial({(0, 1): Fraction(1, 48), (1, 0): Fraction(1, 12)}, 1, g=1)
    return None


def _by_first(child: VolumePolynomial) -> Dict[int, list]:
    # group a child volume by the exponent of its first (glued) variable
    groups: Dict[int, list] = {}
    for m, c in child.items():
        groups.setdefault(m[1], []).append((m[0], m[2:], c))
    return groups


def _by_first_two(child: VolumePolynomial) -> Dict[Tuple[int, int], list]:
    groups: Dict[Tuple[int, int], list] = {}
    for m, c in child.items():
        groups.setdefault((m[1], m[2]), []).append((m[0], m[3:], c))
    return groups


class VolumeCache:
    """Memo table (g, n) -> V_{g,n}; every stored entry has passed the volume invariants."""

    def __init__(self):
        self._table: Dict[Tuple[int, int], VolumePolynomial] = {}
        self._lock = threading.RLock()

    def __contains__(self, key) -> bool:
        return key in self._table

    def __len__(self) -> int:
        return len(self._table)

    def keys(self):
        return sorted(self._table)

    def items(self):
        return [(k, self._table[k]) for k in sorted(self._table)]

    def peek(self, g: int, n: int) -> Optional[VolumePolynomial]:
        return self._table.get((g, n))

    def insert(self, g: int, n: int, V: VolumePolynomial) -> None:
        check_stable(g, n)
        if n == 0:
            raise PolynomialError("closed volumes are not polynomials in L; not cached here")
        V.check_volume_invariants(g, n)
        with self._lock:
            self._table[(g, n)] = V.with_genus(g)

    def get(self, g: int, n: int) -> VolumePolynomial:
        key = (g, n)
        V = self._table.get(key)
        if V is not None:
            return V
        with self._lock:
            V = self._table.get(key)
            if V is None:
                V = _compute(g, n, self)
                self.insert(g, n, V)
                V = self._table[key]
        return V


_default_cache = VolumeCache()


def default_cache() -> VolumeCache:
    return _default_cache


def _child(cache: VolumeCache, g: int, n: int) -> Optional[VolumePolynomial]:
    # V_{0,1} = V_{0,2} = 0 by convention; any unstable child vanishes
    if not _is_stable(g, n):
        return None
    return cache.get(g, n)


def recursion_rhs(g: int, n: int, cache: Optional[VolumeCache] = None) -> VolumePolynomial:
    """Right-hand side 2 d/dL_1 (L_1 V_{g,n}) as a polynomial in p, x_1..x_n."""
    check_stable(g, n)
    if n == 0:
        raise PolynomialError("the recursion needs a boundary; use closed_volume for n = 0")
    if 2 * g + n <= 3:
        raise PolynomialError(f"({g}, {n}) is a base case of the recursion")
    cache = cache if cache is not None else _default_cache
    rhs: Dict[Monomial, Fraction] = {}

    def add(key, c):
        rhs[key] = rhs.get(key, 0) + c

    # non-separating: V_{g-1,n+1}(x, y, L_2..L_n)
    child = _child(cache, g - 1, n + 1) if g >= 1 else None
    if child is not None:
        for (a, b), rows in _by_first_two(child).items():
            for pe, x1, c in transform_double(a, b):
                for e, rest, cc in rows:
                    add((e + pe, x1) + rest, cc * c)

    # splitting: V_{g1,|I|+1}(x, L_I) V_{g2,|J|+1}(y, L_J) over ordered (g1, I)
    others = list(range(2, n + 1))
    for g1 in range(g + 1):
        g2 = g - g1
        for size in range(len(others) + 1):
            for I in combinations(others, size):
                J = [i for i in others if i not in I]
                if not (_is_stable(g1, len(I) + 1) and _is_stable(g2, len(J) + 1)):
                    continue
                c1 = cache.get(g1, len(I) + 1)
                c2 = cache.get(g2, len(J) + 1)
                grp1, grp2 = _by_first(c1), _by_first(c2)
                for a, rows1 in grp1.items():
                    for b, rows2 in grp2.items():
                        kernel = transform_double(a, b)
                        for e1, r1, v1 in rows1:
                            for e2, r2, v2 in rows2:
                                slots = [0] * (n + 1)
                                for idx, ex in zip(I, r1):
                                    slots[idx] = ex
                                for idx, ex in zip(J, r2):
                                    slots[idx] = ex
                                v = v1 * v2
                                for pe, x1, c in kernel:
                                    slots[0] = e1 + e2 + pe
                                    slots[1] = x1
                                    add(tuple(slots), v * c)

    # boundary: V_{g,n-1}(x, L_2..^L_k..L_n)
    child = _child(cache, g, n - 1) if n >= 2 else None
    if child is not None:
        grp = _by_first(child)
        for k in range(2, n + 1):
            rest_idx = [i for i in others if i != k]
            for a, rows in grp.items():
                kernel = transform_boundary(a)
                for e, rest, v in rows:
                    slots = [0] * (n + 1)
                    for idx, ex in zip(rest_idx, rest):
                        slots[idx] = ex
                    for pe, x1, xk, c in kernel:
                        slots[0] = e + pe
                        slots[1] = x1
                        slots[k] = xk
                        add(tuple(slots), v * c)

    return VolumePolynomial._raw(rhs, n)


def _compute(g: int, n: int, cache: VolumeCache) -> VolumePolynomial:
    check_stable(g, n)
    if n == 0:
        raise PolynomialError("V_{g,0} has no boundary; use intersection.closed_volume")
    base = _base_volume(g, n)
    if base is not None:
        return base
    rhs = recursion_rhs(g, n, cache)
    # int_0^{L_1} (.) dL_1 / (2 L_1): x_1^a -> x_1^a / (2(2a+1))
    out = {m: c / (2 * (2 * m[1] + 1)) for m, c in rhs.items()}
    V = VolumePolynomial._raw(out, n, g)
    try:
        V.check_volume_invariants(g, n)
    except PolynomialError as exc:
        raise AssertionError(f"internal consistency failure computing V_{g},{n}: {exc}") from exc
    return V


def compute_volume(g: int, n: int, cache: Optional[VolumeCache] = None) -> VolumePolynomial:
    """V_{g,n}(L) for stable (g, n) with n >= 1, memoized in ``cache``."""
    check_stable(g, n)
    if n == 0:
        raise PolynomialError("V_{g,0} has no boundary; use intersection.closed_volume")
    cache = cache if cache is not None else _default_cache
    return cache.get(g, n)
