"""Ground-truth counts by convolution and by literal enumeration.

Convolution is the working oracle.  Enumeration materialises every tuple
and exists to check the convolution code on small instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

ENUMERATION_BUDGET = 10**8
# largest block of tuples held in memory at once during enumeration
_BLOCK = 1 << 20


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class ProblemSpec:
    """Counting problem (a1+...+ah) - (a_{h+1}+...+a_{h+k}) = c over I_{m,n}."""

    h: int
    k: int
    m: int = 0
    c: int = 0

    def __post_init__(self):
        if self.h < 1 or self.k < 1:
            raise ValueError(f"h and k must be positive, got h={self.h}, k={self.k}")

    def mirrored(self) -> ProblemSpec:
        return ProblemSpec(self.k, self.h, self.m, -self.c)


def intset(values: Iterable[int]) -> tuple[int, ...]:
    """Normalise to a nonempty, strictly increasing tuple of ints."""
    out = tuple(sorted(set(int(v) for v in values)))
    if not out:
        raise ValueError("set must be nonempty")
    return out


def interval(m: int, n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError(f"interval length must be >= 1, got {n}")
    return tuple(range(m, m + n))


def is_interval(A: tuple[int, ...]) -> bool:
    return A[-1] - A[0] + 1 == len(A)


@dataclass(frozen=True)
class RepProfile:
    """counts[i] = number of ordered h-tuples from A summing to base + i."""

    base: int
    counts: tuple[int, ...]

    def __call__(self, x: int) -> int:
        i = x - self.base
        if 0 <= i < len(self.counts):
            return self.counts[i]
        return 0

    @property
    def top(self) -> int:
        return self.base + len(self.counts) - 1

    def support(self) -> list[int]:
        return [self.base + i for i, v in enumerate(self.counts) if v]


def _window_sum(vec: list[int], n: int) -> list[int]:
    # out[x] = vec[x] + vec[x-1] + ... + vec[x-n+1], i.e. convolution with [1]*n
    out = []
    run = 0
    for x in range(len(vec) + n - 1):
        if x < len(vec):
            run += vec[x]
        if x - n >= 0:
            run -= vec[x - n]
        out.append(run)
    return out


def rep_profile(A: Iterable[int], h: int) -> RepProfile:
    """Representation function of A by h-fold sums, via h-1 convolutions."""
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    A = intset(A)
    return _rep_profile(A, h)


@lru_cache(maxsize=512)
def _rep_profile(A: tuple[int, ...], h: int) -> RepProfile:
    lo = A[0]
    indicator = [0] * (A[-1] - lo + 1)
    for a in A:
        indicator[a - lo] = 1
    counts = list(indicator)
    if is_interval(A):
        for _ in range(h - 1):
            counts = _window_sum(counts, len(A))
    else:
        offsets = [a - lo for a in A]
        for _ in range(h - 1):
            nxt = [0] * (len(counts) + offsets[-1])
            for i, v in enumerate(counts):
                if v:
                    for off in offsets:
                        nxt[i + off] += v
            counts = nxt
    return RepProfile(h * lo, tuple(counts))


def phi_convolve(spec: ProblemSpec, n: int) -> int:
    """Sum over x of r_h(x) * r_k(x - c) on the interval I_{m,n}."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    A = interval(spec.m, n)
    rh = _rep_profile(A, spec.h)
    rk = _rep_profile(A, spec.k)
    lo = max(rh.base, rk.base + spec.c)
    hi = min(rh.top, rk.top + spec.c)
    return sum(rh(x) * rk(x - spec.c) for x in range(lo, hi + 1))


def psi(A: Iterable[int], h: int) -> int:
    """Number of 2h-tuples from A whose two halves have equal sums."""
    return sum(v * v for v in rep_profile(A, h).counts)


def positivity_range(h: int, k: int, m: int, n: int) -> tuple[int, int]:
    """Closed range of c for which the count is positive."""
    shift = (h - k) * m
    return -k * n + k + shift, h * n - h + shift


def enumerate_differences(h: int, k: int, m: int, n: int,
                          budget: int = ENUMERATION_BUDGET) -> dict[int, int]:
    """Tally every tuple in I_{m,n}^(h+k) by its value of sum(first h) - sum(last k).

    Tuples are generated explicitly, in blocks, with numpy.
    """
    total = n ** (h + k)
    if total > budget:
        raise BudgetExceeded(
            f"{total} tuples exceeds enumeration budget {budget}; use phi_convolve"
        )
    return dict(_enumerate_differences(h, k, m, n))


@lru_cache(maxsize=256)
def _enumerate_differences(h: int, k: int, m: int, n: int) -> tuple[tuple[int, int], ...]:
    values = np.arange(m, m + n, dtype=np.int64)
    signs = [1] * h + [-1] * k
    # inner coordinates are broadcast; outer ones are looped over
    inner = 0
    while inner < len(signs) and n ** (inner + 1) <= _BLOCK:
        inner += 1
    inner = max(inner, 1)
    outer_signs, inner_signs = signs[: len(signs) - inner], signs[len(signs) - inner:]
    block = np.zeros(1, dtype=np.int64)
    for s in inner_signs:
        block = np.add.outer(block, s * values).ravel()
    lo = -k * (m + n - 1) + h * m
    hi = h * (m + n - 1) - k * m
    tally = np.zeros(hi - lo + 1, dtype=np.int64)
    for prefix in itertools.product(range(m, m + n), repeat=len(outer_signs)):
        offset = sum(s * a for s, a in zip(outer_signs, prefix))
        tally += np.bincount(block + (offset - lo), minlength=len(tally))
    return tuple((lo + i, int(v)) for i, v in enumerate(tally) if v)


def phi_enumerate(spec: ProblemSpec, n: int, budget: int = ENUMERATION_BUDGET) -> int:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    tally = enumerate_differences(spec.h, spec.k, spec.m, n, budget)
    return tally.get(spec.c, 0)
