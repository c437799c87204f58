"""Growth polynomials in n, built symbolically from the binomial sum."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .closedform import n_threshold, u0_fixed
from .exactmath import Poly, binomial, binomial_linear_poly, poly_eval
from .oracle import ProblemSpec, phi_convolve


@dataclass(frozen=True)
class GrowthResult:
    spec: ProblemSpec
    poly: Poly
    n0_paper: int
    n0_empirical: int
    u0_fixed: int

    def __call__(self, n: int) -> Fraction:
        return poly_eval(self.poly, n)


def _alternating_sum(h: int, k: int, m: int, c: int, top: int) -> Poly:
    N = h + k
    base = -(h - k) * m + h + c - 1
    total = Poly()
    for u in range(top + 1):
        term = binomial_linear_poly(k - u, base, N - 1) * binomial(N, u)
        total = total - term if u % 2 else total + term
    return total


def growth_polynomial(spec: ProblemSpec) -> GrowthResult:
    """Polynomial equal to the count for all n >= n0_empirical.

    n0_empirical is found by walking down from the theorem's threshold
    while the polynomial still matches the convolution count.
    """
    top = u0_fixed(spec)
    poly = _alternating_sum(spec.h, spec.k, spec.m, spec.c, top)
    n0 = max(1, n_threshold(spec))
    n = n0
    while n > 1 and poly_eval(poly, n - 1) == phi_convolve(spec, n - 1):
        n -= 1
    return GrowthResult(spec, poly, n0, n, top)


@lru_cache(maxsize=None)
def psi_polynomial(h: int) -> Poly:
    """Polynomial counting equal-sum 2h-tuples over I_n (valid for n >= h)."""
    if h < 1:
        raise ValueError(f"h must be >= 1, got {h}")
    return _alternating_sum(h, h, 0, 0, h - 1)


def leading_coeff(h: int) -> Fraction:
    return psi_polynomial(h).coeff(2 * h - 1)


def ogf_psi3_coeffs(count: int) -> list[int]:
    """First ``count`` coefficients of x(1+14x+36x^2+14x^3+x^4)/(1-x)^6."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    numerator = [0, 1, 14, 36, 14, 1]
    # 1/(1-x)^6 = sum_j C(j+5, 5) x^j
    denom_series = [binomial(j + 5, 5) for j in range(count)]
    out = []
    for j in range(count):
        out.append(sum(numerator[i] * denom_series[j - i]
                       for i in range(min(j, len(numerator) - 1) + 1)))
    return out
