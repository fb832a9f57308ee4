from __future__ import annotations

import math

import pytest

from wpvol.asymptotics import (boundary_report, bracket_ratio, exact_bracket_ratio, ratio_boundary,
                               ratio_genus, report_csv, zograf_conjecture_report)


@pytest.mark.parametrize("g,expected", [(2, 18.72), (3, 25.65), (5, 31.19)])
def test_boundary_ratio_examples(cache, g, expected):
    assert ratio_boundary(g, 0, cache) == pytest.approx(expected, abs=5e-3)


def test_boundary_ratio_exact_value(cache):
    expected = (29 * math.pi ** 8 / 192) / (4 * 43 * math.pi ** 6 / 2160)
    assert ratio_boundary(2, 0, cache) == pytest.approx(expected, rel=1e-14)


def test_boundary_trend(cache):
    rep = boundary_report(range(2, 6), 0, cache)
    assert rep.increasing and rep.bounded
    assert max(rep.values) < 4 * math.pi ** 2


def test_genus_ratio(cache):
    assert ratio_genus(2, 0, cache) == pytest.approx((43 * math.pi ** 6 / 2160) / (math.pi ** 4 / 4), rel=1e-14)
    assert 0 < ratio_genus(3, 0, cache) < 1.5


def test_bracket_ratios(cache):
    assert bracket_ratio(1, (1,), cache) == pytest.approx(0.5 / (math.pi ** 2 / 12), rel=1e-14)
    assert bracket_ratio(2, (1,), cache) == pytest.approx(0.945, abs=1e-3)
    exact = exact_bracket_ratio(1, (0,), cache)
    assert (exact.coeff, exact.p_exp) == (1, 0)


@pytest.mark.parametrize("g", [2, 4, 5])
def test_conjecture_report_finite(cache, g):
    v = zograf_conjecture_report(g, 1, cache)
    assert math.isfinite(v) and v > 0


def test_csv():
    text = report_csv([(2, 0, 18.7, 4 * math.pi ** 2)])
    assert text.splitlines()[0] == "g,n,ratio,reference"
