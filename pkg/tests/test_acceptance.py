"""
Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line; run this file directly
(``python tests/test_acceptance.py``) to get just those lines.
"""
from __future__ import annotations

import math
import sys
import time
from itertools import product
from typing import Callable, List, Tuple

import pytest

from wpvol.asymptotics import boundary_report, exact_bracket_ratio
from wpvol.checks import identity_range
from wpvol.intersection import (check_second_derivative, check_string_dilaton_volume, closed_volume,
                                reconstruct_volume)
from wpvol.kdv import build_table, check_kdv_pde, check_virasoro, kdv_cases, virasoro_cases
from wpvol.recursion import VolumeCache, compute_volume, eval_D, eval_R, kernel_F, quad_check_F, recursion_rhs
from wpvol.reference import CLOSED_VOLUMES, KERNEL_TABLE, VOLUME_TABLE, WORKED_RHS_1_2, table_entry
from wpvol.ribbon import kontsevich_check
from wpvol.zograf import check_zograf

Result = Tuple[bool, str]


def crit_table() -> Result:
    cache = VolumeCache()
    t0 = time.perf_counter()
    bad = [(g, n) for g, n in sorted(VOLUME_TABLE) if compute_volume(g, n, cache) != table_entry(g, n)]
    bad += [(g, 0) for g in CLOSED_VOLUMES if closed_volume(g, cache).at_zero() != CLOSED_VOLUMES[g]]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    return ok, f"{len(VOLUME_TABLE) + len(CLOSED_VOLUMES)} rows, mismatches {bad}, {elapsed:.1f}s from empty cache"


def crit_kernels() -> Result:
    bad = [k for k in range(1, 5) if sorted(kernel_F(k).terms()) != sorted(KERNEL_TABLE[k])]
    return not bad, "F_1, F_3, F_5, F_7 exact" if not bad else f"mismatch at k = {bad}"


def crit_worked_example() -> Result:
    got = dict(recursion_rhs(1, 2, VolumeCache()).terms)
    return got == WORKED_RHS_1_2, f"{len(got)} monomials"


def crit_string_dilaton() -> Result:
    cache = VolumeCache()
    pairs = identity_range()
    failed = []
    for g, n in pairs:
        s, d = check_string_dilaton_volume(g, n, cache)
        if not (s.passed and d.passed):
            failed.append(("string/dilaton", g, n))
        if not check_second_derivative(g, n, cache).passed:
            failed.append(("second derivative", g, n))
    vanish = all(compute_volume(g, 1, cache).substitute_2pi_i(1).is_zero() for g in range(1, 6))
    ok = not failed and vanish
    return ok, (f"{len(pairs)} (g,n) pairs; V_g,1(2 pi i) = 0 for g = 1..5: {vanish}; "
                f"second derivative with constant 4g-4+n; failures {failed}")


def crit_closed() -> Result:
    cache = VolumeCache()
    bad = [g for g in CLOSED_VOLUMES if closed_volume(g, cache).at_zero() != CLOSED_VOLUMES[g]]
    return not bad, "V_2,0 .. V_5,0 exact" if not bad else f"mismatch for g = {bad}"


def crit_zograf() -> Result:
    cache = VolumeCache()
    bad = [n for n in range(4, 9) if not check_zograf(n, cache).passed]
    return not bad, "n = 4..8" if not bad else f"mismatch for n = {bad}"


def crit_kontsevich() -> Result:
    t0 = time.perf_counter()
    table = build_table(6, VolumeCache())
    reports = [kontsevich_check(g, n, table.correlator) for g, n in [(0, 3), (1, 1), (0, 4), (1, 2)]]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in reports) and elapsed < 60
    return ok, "; ".join(f"{r.name}: {r.detail}" for r in reports) + f"; {elapsed:.1f}s"


def crit_kdv_virasoro() -> Result:
    table = build_table(6, VolumeCache())
    kdv = [check_kdv_pde(n, e, table) for n, e in kdv_cases(6)]
    vir = [check_virasoro(n, e, table) for n, e in virasoro_cases(6, (-1, 0, 1, 2))]
    bad = [r.name for r in kdv + vir if not r.passed]
    return not bad, f"{len(kdv)} KdV and {len(vir)} Virasoro coefficient identities; failures {bad[:3]}"


def crit_quadrature() -> Result:
    worst = 0.0
    ok = True
    for k, t in product(range(1, 5), (0, 1, 2)):
        rep = quad_check_F(k, t, 1e-6)
        ok &= rep.passed
        worst = max(worst, rep.rel_error)
    kern = 0.0
    for x, y, z in product((0.5, 2.0), (0.3, 1.7), (0.4, 2.5)):
        kern = max(kern, abs(eval_D(0.0, y, z)), abs(eval_R(x, y, 0.0) - x))
    ok &= kern <= 1e-12
    return ok, f"max relative error {worst:.2e}; max |D(0,y,z)|, |R(x,y,0) - x| = {kern:.2e}"


def crit_asymptotics() -> Result:
    cache = VolumeCache()
    rep = boundary_report(range(2, 6), 0, cache)
    ratios = []
    for g, n in sorted(VOLUME_TABLE):
        D = 3 * g - 3 + n
        if D > 6:
            continue
        for alpha in product(range(D + 1), repeat=n):
            if sum(alpha) <= D:
                ratios.append((alpha, exact_bracket_ratio(g, alpha, cache)))
    in_range = all(0 < float(r) <= 1 for a, r in ratios if sum(a))
    exact_one = all(r.coeff == 1 and r.p_exp == 0 for a, r in ratios if not sum(a))
    ok = rep.increasing and rep.bounded and in_range and exact_one
    vals = ", ".join(f"{v:.3f}" for v in rep.values)
    return ok, f"boundary ratios g=2..5: {vals} (4 pi^2 = {4 * math.pi ** 2:.3f}); {len(ratios)} bracket ratios"


def crit_invariants() -> Result:
    cache = VolumeCache()
    bad = []
    for g, n in sorted(VOLUME_TABLE):
        V = compute_volume(g, n, cache)
        try:
            V.check_volume_invariants(g, n)
        except ValueError:
            bad.append(("invariants", g, n))
        if reconstruct_volume(g, n, cache) != V:
            bad.append(("round-trip", g, n))
    return not bad, f"{len(VOLUME_TABLE)} volumes; failures {bad}"


CRITERIA: List[Tuple[str, Callable[[], Result]]] = [
    ("1 volume table reproduced exactly", crit_table),
    ("2 kernel polynomials F_1..F_7", crit_kernels),
    ("3 worked right-hand side for (1,2)", crit_worked_example),
    ("4 string, dilaton, second derivative, V_g,1(2 pi i) = 0", crit_string_dilaton),
    ("5 closed volumes from V_g,1", crit_closed),
    ("6 Zograf recursion n = 4..8", crit_zograf),
    ("7 Kontsevich formula (0,3) (1,1) (0,4) (1,2)", crit_kontsevich),
    ("8 KdV and Virasoro at max_level 6", crit_kdv_virasoro),
    ("9 quadrature and kernel boundary values", crit_quadrature),
    ("10 ratio monotonicity and bracket ratio bounds", crit_asymptotics),
    ("11 invariants and intersection round-trip", crit_invariants),
]


def _line(name: str, ok: bool, detail: str) -> str:
    return f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}"


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, fn, capsys):
    ok, detail = fn()
    with capsys.disabled():
        print("\n" + _line(name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(name, *fn()) for name, fn in CRITERIA]
    for name, ok, detail in results:
        print(_line(name, ok, detail))
    sys.exit(0 if all(ok for _, ok, _ in results) else 1)
