"""Additive energy, Freiman constants and the uncertainty product."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from typing import Iterable, Sequence

from .exactmath import Poly, poly_eval
from .growthpoly import leading_coeff, psi_polynomial
from .oracle import BudgetExceeded, intset, is_interval, rep_profile

# dense representation-profile entries allowed for generic sets
PROFILE_BUDGET = 10**7


@dataclass(frozen=True)
class EnergyReport:
    descriptor: str
    h: int
    size: int
    psi: int
    sumset_size: int
    omega: Fraction
    kappa: Fraction
    product: Fraction


def describe(A: Sequence[int]) -> str:
    if is_interval(A):
        return f"interval:{A[0]}:{len(A)}"
    return "set:" + ",".join(str(a) for a in A)


def _check_budget(A: Sequence[int], h: int) -> None:
    width = h * (A[-1] - A[0]) + 1
    if width > PROFILE_BUDGET:
        raise BudgetExceeded(f"representation profile of width {width} exceeds {PROFILE_BUDGET}")


def sumset_size(A: Iterable[int], h: int) -> int:
    A = intset(A)
    _check_budget(A, h)
    return sum(1 for v in rep_profile(A, h).counts if v)


def energy_report(A: Iterable[int], h: int) -> EnergyReport:
    A = intset(A)
    _check_budget(A, h)
    counts = rep_profile(A, h).counts
    psi_value = sum(v * v for v in counts)
    hA = sum(1 for v in counts if v)
    omega = Fraction(psi_value, len(A) ** (2 * h - 1))
    kappa = Fraction(hA, len(A))
    return EnergyReport(describe(A), h, len(A), psi_value, hA, omega, kappa, omega * kappa)


@dataclass(frozen=True)
class IntervalEnergy:
    """omega_h(I_n) = psi_poly(n) / n**exponent and kappa_h(I_n) = sumset_poly(n) / n."""

    h: int
    psi_poly: Poly
    exponent: int
    sumset_poly: Poly

    def omega(self, n: int) -> Fraction:
        return poly_eval(self.psi_poly, n) / Fraction(n) ** self.exponent

    def kappa(self, n: int) -> Fraction:
        return poly_eval(self.sumset_poly, n) / n

    def product(self, n: int) -> Fraction:
        return self.omega(n) * self.kappa(n)


def interval_energy_poly(h: int) -> IntervalEnergy:
    return IntervalEnergy(h, psi_polynomial(h), 2 * h - 1, Poly([1 - h, h]))


def round_sig(q: Fraction, digits: int) -> Decimal:
    """Round to ``digits`` significant figures, half-even, keeping trailing zeros."""
    if q == 0:
        return Decimal(0)
    ctx = Context(prec=digits + 40)
    exact = ctx.divide(Decimal(q.numerator), Decimal(q.denominator))
    quantum = Decimal(1).scaleb(exact.adjusted() - digits + 1)
    out = exact.quantize(quantum, rounding=ROUND_HALF_EVEN)
    if out.adjusted() != exact.adjusted():
        # rounding carried into a new decade, e.g. 9.99996 -> 10.000
        out = out.quantize(quantum.scaleb(1), rounding=ROUND_HALF_EVEN)
    return out


@dataclass(frozen=True)
class TableRow:
    h: int
    ell: Fraction
    U: Fraction
    ell_dec: Decimal
    U_dec: Decimal


def u_table(hs: Iterable[int], digits: int = 5) -> list[TableRow]:
    rows = []
    for h in sorted(set(hs)):
        ell = leading_coeff(h)
        U = h * ell
        rows.append(TableRow(h, ell, U, round_sig(ell, digits), round_sig(U, digits)))
    return rows
