import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_phi, brute_rep
from phigrowth.oracle import (
    BudgetExceeded,
    ProblemSpec,
    enumerate_differences,
    interval,
    intset,
    phi_convolve,
    phi_enumerate,
    positivity_range,
    psi,
    rep_profile,
)


def test_problem_spec_validation():
    with pytest.raises(ValueError):
        ProblemSpec(0, 1)
    assert ProblemSpec(3, 2, 1, 5).mirrored() == ProblemSpec(2, 3, 1, -5)


def test_intset():
    assert intset([3, 1, 3, 0]) == (0, 1, 3)
    with pytest.raises(ValueError):
        intset([])


def test_rep_profile_examples():
    r = rep_profile([0, 1, 2], 2)
    assert (r.base, r.counts) == (0, (1, 2, 3, 2, 1))
    r = rep_profile([0, 1, 3], 2)
    assert (r.base, r.counts) == (0, (1, 2, 1, 2, 2, 0, 1))
    assert r.support() == [0, 1, 2, 3, 4, 6]


@pytest.mark.parametrize("h", range(1, 6))
def test_rep_profile_interval_low_sums(h):
    n = 7
    r = rep_profile(range(n), h)
    for x in range(n):
        assert r(x) == math.comb(x + h - 1, h - 1)


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(-6, 6), min_size=1, max_size=6), st.integers(1, 3))
def test_rep_profile_matches_brute(A, h):
    r = rep_profile(A, h)
    expected = brute_rep(sorted(A), h)
    assert sum(r.counts) == len(A) ** h
    for x in range(r.base - 2, r.top + 3):
        assert r(x) == expected.get(x, 0)


@pytest.mark.parametrize("m,n,h", [(0, 5, 3), (-3, 4, 2), (2, 6, 4)])
def test_rep_profile_interval_symmetric(m, n, h):
    counts = rep_profile(interval(m, n), h).counts
    assert counts == counts[::-1]


def test_phi_enumerate_examples():
    assert phi_enumerate(ProblemSpec(2, 2, 0, 0), 1) == 1
    assert phi_enumerate(ProblemSpec(2, 2, 0, 0), 2) == 6
    for h, k, m in [(1, 1, 0), (3, 2, -2), (2, 4, 3)]:
        assert phi_enumerate(ProblemSpec(h, k, m, (h - k) * m), 1) == 1
        assert phi_enumerate(ProblemSpec(h, k, m, (h - k) * m + 1), 1) == 0


def test_phi_enumerate_budget():
    with pytest.raises(BudgetExceeded, match="phi_convolve"):
        phi_enumerate(ProblemSpec(4, 4, 0, 0), 20)
    with pytest.raises(BudgetExceeded):
        phi_enumerate(ProblemSpec(2, 2, 0, 0), 5, budget=100)


def test_enumeration_tally_is_complete():
    tally = enumerate_differences(3, 2, 1, 6)
    assert sum(tally.values()) == 6**5


def test_phi_convolve_examples():
    assert phi_convolve(ProblemSpec(2, 2, 0, 0), 5) == 85
    assert phi_convolve(ProblemSpec(3, 2, 0, 12), 11) == 5665
    # frozen from brute force enumeration
    assert phi_convolve(ProblemSpec(3, 2, 1, 0), 4) == 101
    assert [phi_convolve(ProblemSpec(3, 2, 0, 0), n) for n in range(1, 7)] == [1, 10, 45, 135, 320, 651]


@pytest.mark.parametrize("h,k", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (3, 2), (2, 3)])
def test_convolve_matches_brute_force(h, k):
    for m in (-2, 0, 1):
        for n in range(1, 6):
            for c in range(-8, 9):
                spec = ProblemSpec(h, k, m, c)
                expected = brute_phi(h, k, m, c, n)
                assert phi_convolve(spec, n) == expected
                assert phi_enumerate(spec, n) == expected


def test_enumerate_matches_convolve_grid():
    for total in range(2, 7):
        for h in range(1, total):
            for m in range(-2, 3):
                for n in range(1, 9):
                    tally = enumerate_differences(h, total - h, m, n)
                    for c in range(-10, 11):
                        assert tally.get(c, 0) == phi_convolve(ProblemSpec(h, total - h, m, c), n)


def test_psi_examples():
    assert psi(range(1), 4) == 1
    assert psi(range(2), 3) == 20
    assert psi([0, 1, 3], 2) == 15
    for h in (1, 2, 3):
        for n in range(1, 8):
            assert psi(range(n), h) == phi_convolve(ProblemSpec(h, h, 0, 0), n)


def test_positivity_range_examples():
    assert positivity_range(3, 2, 0, 5) == (-8, 12)
    assert positivity_range(2, 2, 7, 4) == (-6, 6)
    for h, k, m in [(1, 1, 0), (4, 2, -3)]:
        assert positivity_range(h, k, m, 1) == ((h - k) * m, (h - k) * m)


@pytest.mark.parametrize("h,k,m,n", [(3, 2, 0, 5), (2, 2, 7, 4), (1, 3, -2, 3), (4, 1, 2, 3)])
def test_positivity_range_is_exact(h, k, m, n):
    lo, hi = positivity_range(h, k, m, n)
    for c in range(lo - 5, hi + 6):
        assert (phi_convolve(ProblemSpec(h, k, m, c), n) > 0) == (lo <= c <= hi)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.integers(-3, 3), st.integers(-12, 12), st.integers(1, 9))
def test_symmetry_and_translation(h, k, m, c, n):
    spec = ProblemSpec(h, k, m, c)
    assert phi_convolve(spec, n) == phi_convolve(spec.mirrored(), n)
    if h == k:
        assert phi_convolve(spec, n) == phi_convolve(ProblemSpec(h, k, 0, c), n)


@pytest.mark.parametrize("h,k,m", [(1, 1, 0), (2, 3, -1), (3, 3, 2), (4, 1, 1)])
def test_total_count(h, k, m):
    for n in range(1, 8):
        lo, hi = positivity_range(h, k, m, n)
        assert sum(phi_convolve(ProblemSpec(h, k, m, c), n) for c in range(lo, hi + 1)) == n ** (h + k)
