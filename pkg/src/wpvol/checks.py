"""Named verification suites; each returns a flat list of CheckReports."""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from .asymptotics import boundary_report, exact_bracket_ratio
from .intersection import (check_bracket_recursion, check_generalized_relations,
                           check_second_derivative, check_string_dilaton_volume,
                           closed_volume, generalized_cases, reconstruct_volume)
from .kdv import (build_table, check_correlator_string_dilaton, check_kdv_pde,
                  check_virasoro, kdv_cases, virasoro_cases)
from .recursion import (VolumeCache, compute_volume, default_cache, eval_D, eval_R,
                        kernel_F, quad_check_F, recursion_rhs)
from .reference import CLOSED_VOLUMES, KERNEL_TABLE, VOLUME_TABLE, WORKED_RHS_1_2, table_entry
from .reports import FAIL, PASS, CheckReport, first_difference
from .ribbon import check_orbit_stabilizer, kontsevich_check
from .zograf import check_zograf

__all__ = ["SUITES", "VerifyConfig", "run_suite", "table_range", "identity_range"]


@dataclass(frozen=True)
class VerifyConfig:
    max_level: int = 6
    bracket_max_dim: int = 6
    quad_tol: float = 1e-6
    kernel_tol: float = 1e-12
    kontsevich_types: Tuple[Tuple[int, int], ...] = ((0, 3), (1, 1), (0, 4), (1, 2), (2, 1))
    orbit_types: Tuple[Tuple[int, int], ...] = ((0, 3), (1, 1), (0, 4), (1, 2))
    zograf_range: Tuple[int, int] = (4, 8)


def table_range() -> List[Tuple[int, int]]:
    """Every (g, n) in the published table, closed volumes included."""
    return sorted(set(VOLUME_TABLE) | {(g, 0) for g in CLOSED_VOLUMES})


def identity_range() -> List[Tuple[int, int]]:
    """(g, n) with 2g-2+n > 0 whose one-boundary extension lies in the table."""
    rows = set(VOLUME_TABLE)
    return sorted((g, n - 1) for g, n in rows if 2 * g - 3 + n > 0)


def _ok(name: str, ok: bool, detail: str = "", **params) -> CheckReport:
    return CheckReport(name, PASS if ok else FAIL, detail, params)


def suite_table(cache: VolumeCache, cfg: VerifyConfig) -> List[CheckReport]:
    out = []
    for g, n in table_range():
        if n == 0:
            V = closed_volume(g, cache)
            c, d = CLOSED_VOLUMES[g]
            got = V.at_zero()
            out.append(_ok(f"table V[{g},0]", got == (c, d), "" if got == (c, d) else f"{got} != {(c, d)}", g=g, n=0))
            continue
        V = compute_volume(g, n, cache)
        ref = table_entry(g, n)
        ok = V == ref
        out.append(_ok(f"table V[{g},{n}]", ok, "" if ok else first_difference(V, ref), g=g, n=n))
        try:
            V.check_volume_invariants(g, n)
            out.append(_ok(f"invariants V[{g},{n}]", True, g=g, n=n))
        except ValueError as exc:
            out.append(_ok(f"invariants V[{g},{n}]", False, str(exc), g=g, n=n))
        R = reconstruct_volume(g, n, cache)
        out.append(_ok(f"round-trip V[{g},{n}]", R == V, "" if R == V else first_difference(R, V), g=g, n=n))
    return out


def suite_kernels(cache: VolumeCache, cfg: VerifyConfig) -> List[CheckReport]:
    out = []
    for k, expected in KERNEL_TABLE.items():
        got = sorted(kernel_F(k).terms())
        out.append(_ok(f"kernel F_{2 * k - 1}", got == sorted(expected), k=k))
    rhs = recursion_rhs(1, 2, cache)
    out.append(_ok("worked right-hand side (1,2)", dict(rhs.terms) == WORKED_RHS_1_2))
    for k in range(1, 5):
        for t in (0, 1, 2):
            rep = quad_check_F(k, t, cfg.quad_tol)
            out.append(_ok(f"quadrature F_{2 * k - 1}({t})", rep.passed,
                           f"rel error {rep.rel_error:.2e}{'; ' + rep.message if rep.message else ''}", k=k, t=t))
    for x, y, z in product((0.5, 1.0, 3.0), (0.7, 2.0), (0.3, 1.5)):
        d = eval_D(0.0, y, z)
        out.append(_ok(f"D(0,{y},{z}) = 0", abs(d) <= cfg.kernel_tol, f"{d:.3e}"))
        r = eval_R(x, y, 0.0)
        out.append(_ok(f"R({x},{y},0) = {x}", abs(r - x) <= cfg.kernel_tol, f"{r - x:.3e}"))
    return out


def suite_string_dilaton(cache: VolumeCache, cfg: VerifyConfig) -> List[CheckReport]:
    out = []
    for g, n in identity_range():
        out.extend(check_string_dilaton_volume(g, n, cache))
    for g in range(1, 6):
        val = compute_volume(g, 1, cache).substitute_2pi_i(1)
        out.append(_ok(f"V[{g},1](2 pi i) = 0", val.is_zero(), "" if val.is_zero() else repr(val), g=g))
    return out


def suite_second_derivative(cache: VolumeCache, cfg: VerifyConfig) -> List[CheckReport]:
    return [check_second_derivative(g, n, cache) for g, n in identity_range()]


def suite_generalized(cache: VolumeCache, cfg: VerifyConfig) -> List[CheckReport]:
    out = []
    for g, n in identity_range():
        if 3 * g - 2 + n > cfg.max_level:
            continue
        for alpha, m in generalized_cases(g, n):
            out.append(check_generalized_relations(g, n, alpha, m, cache))
    return out


def suite_bracket(cache: VolumeCache, cfg: VerifyConfig) -> List[CheckReport]:
    out = []
    for g, n in sorted(VOLUME_TABLE):
        D = 3 * g - 3 + n
        if D > cfg.bracket_max_dim:
            continue
        for alpha in product(range(D + 1), repeat=n):
            if sum(alpha) <= D:
                out.append(check_bracket_recursion(g, alpha, cache))
    return out


def suite_kontsevich(cache: VolumeCache, cfg: VerifyConfig) -> List[CheckReport]:
    table = build_table(cfg.max_level, cache)
    out = [kontsevich_check(g, n, table.correlator) for g, n in cfg.kontsevich_types]
    out.extend(check_orbit_stabilizer(g, n) for g, n in cfg.orbit_types)
    return out


def suite_zograf(cache: VolumeCache, cfg: VerifyConfig) -> List[CheckReport]:
    lo, hi = cfg.zograf_range
    return [check_zograf(n, cache) for n in range(lo, hi + 1)]


def suite_kdv(cache: VolumeCache, cfg: VerifyConfig) -> List[CheckReport]:
    table = build_table(cfg.max_level, cache)
    out = check_correlator_string_dilaton(table)
    out.extend(check_kdv_pde(n, e, table) for n, e in kdv_cases(cfg.max_level))
    return out


def suite_virasoro(cache: VolumeCache, cfg: VerifyConfig) -> List[CheckReport]:
    table = build_table(cfg.max_level, cache)
    return [check_virasoro(n, e, table) for n, e in virasoro_cases(cfg.max_level)]


def suite_asymptotics(cache: VolumeCache, cfg: VerifyConfig) -> List[CheckReport]:
    rep = boundary_report(range(2, 6), 0, cache)
    out = [
        _ok("boundary ratio increasing for g = 2..5", rep.increasing, ", ".join(f"{v:.4f}" for v in rep.values)),
        _ok("boundary ratio below 4 pi^2 for g = 2..5", rep.bounded),
    ]
    for g, n in sorted(VOLUME_TABLE):
        D = 3 * g - 3 + n
        if D > cfg.bracket_max_dim:
            continue
        for alpha in product(range(D + 1), repeat=n):
            if sum(alpha) > D or list(alpha) != sorted(alpha, reverse=True):
                continue
            r = exact_bracket_ratio(g, alpha, cache)
            if sum(alpha) == 0:
                ok = r.coeff == 1 and r.p_exp == 0
            else:
                ok = 0 < float(r) <= 1
            out.append(_ok(f"bracket ratio g={g} alpha={alpha}", ok, f"{float(r):.6f}", g=g, alpha=list(alpha)))
    return out


SUITES: Dict[str, Callable[[VolumeCache, VerifyConfig], List[CheckReport]]] = {
    "table": suite_table,
    "kernels": suite_kernels,
    "string-dilaton": suite_string_dilaton,
    "second-derivative": suite_second_derivative,
    "generalized": suite_generalized,
    "bracket": suite_bracket,
    "kontsevich": suite_kontsevich,
    "zograf": suite_zograf,
    "kdv": suite_kdv,
    "virasoro": suite_virasoro,
    "asymptotics": suite_asymptotics,
}


def run_suite(name: str, cache: Optional[VolumeCache] = None,
              cfg: Optional[VerifyConfig] = None) -> List[CheckReport]:
    cache = cache if cache is not None else default_cache()
    cfg = cfg if cfg is not None else VerifyConfig()
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](cache, cfg)]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return SUITES[name](cache, cfg)
