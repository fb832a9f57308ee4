from __future__ import annotations

from fractions import Fraction

import pytest

from wpvol import kdv
from wpvol.kdv import (CorrelatorTable, alpha_to_counts, check_correlator_string_dilaton,
                       check_kdv_pde, check_virasoro, counts_to_alpha, kdv_cases, virasoro_cases)


def test_table_entries(table):
    assert table.correlator((0, 0, 0)) == 1
    assert table.correlator((1, 0, 0, 0)) == 1
    assert table.correlator((1,)) == Fraction(1, 24)
    # no genus makes 0 = 3g - 3 + 4 hold
    assert table.correlator((0, 0, 0, 0)) == 0
    assert all(v > 0 for v in table.values.values())


def test_counts_round_trip():
    assert alpha_to_counts((2, 0, 0)) == (2, 0, 1)
    assert counts_to_alpha((2, 0, 1)) == (2, 0, 0)


def test_missing_correlator_is_reported(table):
    with pytest.raises(kdv.MissingCorrelator):
        table.correlator((7,))


def test_correlator_string_dilaton(table):
    reports = check_correlator_string_dilaton(table)
    assert reports and all(r.passed for r in reports)
    names = {r.name for r in reports}
    assert "dilaton <(1, 1)>" in names
    assert "string <(1, 0, 0, 0)>" in names


@pytest.mark.parametrize("n,e", [(1, ()), (2, ()), (1, (1,)), (3, (0, 1))])
def test_kdv_examples(table, n, e):
    assert check_kdv_pde(n, e, table).passed


def test_kdv_all_checkable(table):
    reports = [check_kdv_pde(n, e, table) for n, e in kdv_cases(6)]
    assert reports and all(r.passed for r in reports)


def test_kdv_needs_positive_n(table):
    with pytest.raises(ValueError):
        check_kdv_pde(0, (), table)


def test_kdv_inconclusive_above_level():
    small = CorrelatorTable(1, {(3,): Fraction(1), (3, 1): Fraction(1), (0, 1): Fraction(1, 24)})
    assert check_kdv_pde(3, (), small).status == "inconclusive"


@pytest.mark.parametrize("n", [-1, 0, 1, 2])
def test_virasoro_empty_monomial(table, n):
    assert check_virasoro(n, (), table).passed


def test_virasoro_all_checkable(table):
    reports = [check_virasoro(n, e, table) for n, e in virasoro_cases(6)]
    assert len({r.params["n"] for r in reports}) == 4
    assert all(r.passed for r in reports)


def test_virasoro_L0_constant_is_one_sixteenth(table, monkeypatch):
    # with 1/48 the t = 0 coefficient is -3/2 * 1/24 + 1/48 != 0
    monkeypatch.setattr(kdv, "L0_CONSTANT", Fraction(1, 48))
    assert not check_virasoro(0, (), table).passed


def test_virasoro_low_orders_agree_with_string_dilaton(table):
    # L_{-1} and L_0 coefficients are the string and dilaton relations in disguise
    for n, e in virasoro_cases(6, orders=(-1, 0)):
        assert check_virasoro(n, e, table).passed
    assert all(r.passed for r in check_correlator_string_dilaton(table))
