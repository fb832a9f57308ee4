"""
Large-genus diagnostics built from exact volumes.

Every ratio is first formed exactly as c * p^d and only converted to a float
for presentation.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .intersection import bracket_norm, closed_volume
from .recursion import VolumeCache, compute_volume, default_cache

__all__ = [
    "ExactRatio",
    "RatioReport",
    "volume_at_zero",
    "exact_ratio_boundary",
    "exact_ratio_genus",
    "exact_bracket_ratio",
    "ratio_boundary",
    "ratio_genus",
    "bracket_ratio",
    "zograf_conjecture_report",
    "boundary_report",
    "report_csv",
]


@dataclass(frozen=True)
class ExactRatio:
    """The number coeff * pi^(2 p_exp)."""
    coeff: Fraction
    p_exp: int

    def __float__(self) -> float:
        return float(self.coeff) * math.pi ** (2 * self.p_exp)

    def __truediv__(self, other: "ExactRatio") -> "ExactRatio":
        return ExactRatio(self.coeff / other.coeff, self.p_exp - other.p_exp)


def _cache(cache):
    return cache if cache is not None else default_cache()


def volume_at_zero(g: int, n: int, cache: Optional[VolumeCache] = None) -> ExactRatio:
    V = closed_volume(g, _cache(cache)) if n == 0 else compute_volume(g, n, _cache(cache))
    c, d = V.at_zero()
    return ExactRatio(c, d)


def exact_ratio_boundary(g: int, n: int, cache: Optional[VolumeCache] = None) -> ExactRatio:
    """V_{g,n+1}(0) / (2g V_{g,n}(0)); tends to 4 pi^2."""
    if g < 1:
        raise ValueError("the boundary ratio needs g >= 1")
    r = volume_at_zero(g, n + 1, cache) / volume_at_zero(g, n, cache)
    return ExactRatio(r.coeff / (2 * g), r.p_exp)


def exact_ratio_genus(g: int, n: int, cache: Optional[VolumeCache] = None) -> ExactRatio:
    """V_{g,n}(0) / V_{g-1,n+2}(0); tends to 1."""
    return volume_at_zero(g, n, cache) / volume_at_zero(g - 1, n + 2, cache)


def exact_bracket_ratio(g: int, alpha: Sequence[int], cache: Optional[VolumeCache] = None) -> ExactRatio:
    """[tau_alpha]_{g,n} / V_{g,n}(0); tends to 1 for fixed alpha."""
    c, d = bracket_norm(g, tuple(alpha), _cache(cache))
    return ExactRatio(c, d) / volume_at_zero(g, len(alpha), cache)


def ratio_boundary(g: int, n: int, cache: Optional[VolumeCache] = None) -> float:
    return float(exact_ratio_boundary(g, n, cache))


def ratio_genus(g: int, n: int, cache: Optional[VolumeCache] = None) -> float:
    return float(exact_ratio_genus(g, n, cache))


def bracket_ratio(g: int, alpha: Sequence[int], cache: Optional[VolumeCache] = None) -> float:
    return float(exact_bracket_ratio(g, alpha, cache))


def zograf_conjecture_report(g: int, n: int, cache: Optional[VolumeCache] = None) -> float:
    """V_{g,n}(0) / [(g pi)^(-1/2) (4 pi^2)^(2g-3+n) (2g-3+n)!]; diagnostic only."""
    k = 2 * g - 3 + n
    v = float(volume_at_zero(g, n, cache))
    return v * math.sqrt(g * math.pi) / ((4 * math.pi ** 2) ** k * math.factorial(k))


@dataclass
class RatioReport:
    g_values: List[int]
    n: int
    exact: List[ExactRatio] = field(default_factory=list)
    reference: float = 4 * math.pi ** 2

    @property
    def values(self) -> List[float]:
        return [float(r) for r in self.exact]

    @property
    def increasing(self) -> bool:
        v = self.values
        return all(a < b for a, b in zip(v, v[1:]))

    @property
    def bounded(self) -> bool:
        # compare c pi^(2d) with 4 pi^2 exactly in the power of pi: every ratio here has d = 1
        return all(r.p_exp == 1 and r.coeff < 4 for r in self.exact)


def boundary_report(g_values: Sequence[int], n: int = 0, cache: Optional[VolumeCache] = None) -> RatioReport:
    rep = RatioReport(list(g_values), n)
    rep.exact = [exact_ratio_boundary(g, n, cache) for g in g_values]
    return rep


def report_csv(rows: Sequence[Tuple[int, int, float, float]]) -> str:
    """CSV with columns g, n, ratio, reference."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["g", "n", "ratio", "reference"])
    for g, n, ratio, ref in rows:
        w.writerow([g, n, repr(ratio), repr(ref)])
    return buf.getvalue()
