import itertools
from decimal import Decimal
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_rep
from phigrowth.energy import energy_report, interval_energy_poly, round_sig, sumset_size, u_table
from phigrowth.oracle import BudgetExceeded


def test_sumset_size_examples():
    for h in (1, 2, 4):
        for n in (1, 3, 8):
            assert sumset_size(range(n), h) == h * n - h + 1
    assert sumset_size([5], 3) == 1
    assert sumset_size([0, 1, 3], 2) == 6


def test_energy_report_examples():
    r = energy_report(range(2), 2)
    assert (r.psi, r.omega, r.kappa, r.product) == (6, F(3, 4), F(3, 2), F(9, 8))
    assert r.descriptor == "interval:0:2"
    r = energy_report([4], 3)
    assert (r.omega, r.kappa, r.product) == (1, 1, 1)
    r = energy_report([0, 1, 3], 2)
    assert r.psi == 15 and r.descriptor == "set:0,1,3"


def test_energy_budget():
    with pytest.raises(BudgetExceeded):
        energy_report([0, 10**8], 2)


@pytest.mark.parametrize("n", range(1, 12))
def test_interval_h2_identity(n):
    r = energy_report(range(n), 2)
    assert r.omega == F(2, 3) + F(1, 3 * n * n)
    assert r.kappa == 2 - F(1, n)
    assert r.product == F(4, 3) - F(n * n + (n - 1) ** 2, 3 * n**3)


@pytest.mark.parametrize("n", range(1, 10))
def test_interval_h3_identity(n):
    r = energy_report(range(n), 3)
    assert r.omega == F(11, 20) + F(1, 4 * n**2) + F(1, 5 * n**4)
    assert r.product == F(33, 20) - F(22 * n**4 - 15 * n**3 + 10 * n**2 - 12 * n + 8, 20 * n**5)


def test_interval_energy_poly():
    assert interval_energy_poly(2).omega(3) == F(19, 27)
    assert interval_energy_poly(3).omega(2) == F(5, 8)
    ie = interval_energy_poly(1)
    assert [(ie.omega(n), ie.kappa(n), ie.product(n)) for n in (1, 5)] == [(1, 1, 1)] * 2
    for h in range(1, 5):
        ie = interval_energy_poly(h)
        for n in range(1, 9):
            r = energy_report(range(n), h)
            assert (ie.omega(n), ie.kappa(n), ie.product(n)) == (r.omega, r.kappa, r.product)


@settings(max_examples=100, deadline=None)
@given(st.sets(st.integers(-10, 10), min_size=1, max_size=7), st.integers(1, 3))
def test_uncertainty_inequality(A, h):
    r = energy_report(A, h)
    reps = brute_rep(sorted(A), h)
    assert sum(reps.values()) == len(A) ** h
    assert r.psi == sum(v * v for v in reps.values())
    assert r.sumset_size == len(reps)
    assert r.product >= 1
    assert (r.product == 1) == (len(set(reps.values())) == 1)


@pytest.mark.parametrize("q,digits,expected", [
    (F(2, 3), 5, "0.66667"),
    (F(1), 5, "1.0000"),
    (F(4, 3), 5, "1.3333"),
    (F(999995, 100000), 5, "10.000"),
    (F(25, 1000000), 1, "0.00002"),
    (F(-1, 3), 2, "-0.33"),
])
def test_round_sig(q, digits, expected):
    assert str(round_sig(q, digits)) == expected


def test_u_table_rows():
    rows = u_table([7, 1, 50, 1])
    assert [r.h for r in rows] == [1, 7, 50]
    assert all(r.U == r.h * r.ell for r in rows)
    assert (rows[0].ell_dec, rows[0].U_dec) == (Decimal("1.0000"), Decimal("1.0000"))
    assert str(rows[1].ell_dec) == "0.36537" and str(rows[1].U_dec) == "2.5576"
    assert str(rows[2].ell_dec) == "0.13799" and str(rows[2].U_dec) == "6.8995"


def test_monotone_on_computed_range():
    # observed data, not a theorem
    rows = u_table(range(1, 31))
    assert all(a.ell > b.ell for a, b in zip(rows, rows[1:]))
    assert all(a.U < b.U for a, b in zip(rows, rows[1:]))
