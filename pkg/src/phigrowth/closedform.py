"""Closed-form binomial sum for the count, and the power-series route to it."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactmath import binomial, choose
from .oracle import ProblemSpec


def _offset(spec: ProblemSpec) -> int:
    """c - k - (h-k)m; its sign decides which regime the count is in."""
    return spec.c - spec.k - (spec.h - spec.k) * spec.m


def series_index(spec: ProblemSpec, n: int) -> int:
    """Exponent w of z whose coefficient in F_n(z)^(h+k) is the count."""
    return spec.k * n + _offset(spec)


def u0(spec: ProblemSpec, n: int) -> int | None:
    """Upper limit of the alternating sum, or None when w < 0 (no solutions).

    The bracket is a floor (rounds toward minus infinity).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    w = series_index(spec, n)
    if w < 0:
        return None
    return min(spec.h + spec.k, w // n)


def phi_closed(spec: ProblemSpec, n: int) -> int:
    """Exact count from the alternating binomial sum, valid for every n >= 1."""
    N = spec.h + spec.k
    w = series_index(spec, n)
    if w < 0 or w > N * (n - 1):
        return 0
    top = u0(spec, n)
    base = -(spec.h - spec.k) * spec.m + spec.h + spec.c - 1
    total = 0
    for u in range(top + 1):
        term = binomial(N, u) * choose((spec.k - u) * n + base, N - 1)
        total += -term if u % 2 else term
    return total


@dataclass(frozen=True)
class SeriesVec:
    """Truncated series sum coeffs[i] z^(i + shift), integer coefficients."""

    coeffs: tuple[int, ...]
    shift: int = 0

    @property
    def w_max(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, exponent: int) -> int:
        i = exponent - self.shift
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def shifted(self, by: int) -> SeriesVec:
        return SeriesVec(self.coeffs, self.shift + by)


def fn_coefficient(n: int, N: int, w: int) -> int:
    """Coefficient of z^w in (1 + z + ... + z^(n-1))^N."""
    if w < 0:
        return 0
    total = 0
    for u in range(min(N, w // n) + 1):
        term = binomial(N, u) * binomial(w - u * n + N - 1, N - 1)
        total += -term if u % 2 else term
    return total


@lru_cache(maxsize=1024)
def fn_power_series(n: int, N: int, w_max: int) -> SeriesVec:
    """Coefficients of F_n(z)^N for exponents 0..w_max."""
    return SeriesVec(tuple(fn_coefficient(n, N, w) for w in range(w_max + 1)))


def phi_via_series(spec: ProblemSpec, n: int) -> int:
    """Coefficient of z^c in G(z)^h G(1/z)^k, with G(z) = z^m F_n(z)."""
    N = spec.h + spec.k
    series = fn_power_series(n, N, N * (n - 1))
    laurent = series.shifted((spec.h - spec.k) * spec.m - spec.k * (n - 1))
    return laurent[spec.c]


def n_threshold(spec: ProblemSpec) -> int:
    """Smallest n from which u0 settles on its fixed value (k-1 or k)."""
    d = _offset(spec)
    if d < 0:
        return -d
    return d + 1


def u0_fixed(spec: ProblemSpec) -> int:
    return spec.k - 1 if _offset(spec) < 0 else spec.k
