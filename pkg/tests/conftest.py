import itertools

import pytest


def brute_phi(h, k, m, c, n):
    """Count (h+k)-tuples over {m..m+n-1} one at a time; no shared code with the package."""
    values = range(m, m + n)
    return sum(1 for t in itertools.product(values, repeat=h + k)
               if sum(t[:h]) - sum(t[h:]) == c)


def brute_rep(A, h):
    counts = {}
    for t in itertools.product(A, repeat=h):
        counts[sum(t)] = counts.get(sum(t), 0) + 1
    return counts


@pytest.fixture
def brute():
    return brute_phi
