"""Grid cross-check of every counting route plus the structural invariants."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .closedform import n_threshold, phi_closed, phi_via_series, u0, u0_fixed
from .growthpoly import growth_polynomial, psi_polynomial
from .exactmath import poly_eval
from .oracle import (
    ENUMERATION_BUDGET,
    ProblemSpec,
    enumerate_differences,
    phi_convolve,
    positivity_range,
)


@dataclass(frozen=True)
class Grid:
    max_hk: int = 6
    max_abs_m: int = 2
    max_abs_c: int = 10
    max_n: int = 12

    def specs(self):
        for total in range(2, self.max_hk + 1):
            for h in range(1, total):
                for m in range(-self.max_abs_m, self.max_abs_m + 1):
                    for c in range(-self.max_abs_c, self.max_abs_c + 1):
                        yield ProblemSpec(h, total - h, m, c)


_GRID_KEYS = {"hk": "max_hk", "h+k": "max_hk", "|m|": "max_abs_m",
              "|c|": "max_abs_c", "n": "max_n"}


def parse_grid(text: str) -> Grid:
    """Parse e.g. ``"hk<=6,|m|<=2,|c|<=10,n<=12"``; omitted keys keep defaults."""
    values = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        match = re.fullmatch(r"(hk|h\+k|\|m\||\|c\||n)\s*<=\s*(\d+)", part)
        if not match:
            raise ValueError(f"bad grid term {part!r}")
        values[_GRID_KEYS[match.group(1)]] = int(match.group(2))
    return Grid(**values)


@dataclass
class VerifyReport:
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, what: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what)

    @property
    def passed(self) -> bool:
        return not self.failures


def run_grid(grid: Grid = Grid(), enum_budget: int = ENUMERATION_BUDGET,
             inject_fault: bool = False) -> VerifyReport:
    """Compare closed form, series, convolution (and enumeration within budget).

    ``inject_fault`` corrupts one closed-form value; it is a negative control
    for the harness itself.
    """
    report = VerifyReport()
    ns = range(1, grid.max_n + 1)
    faulted = False
    for spec in grid.specs():
        for n in ns:
            closed = phi_closed(spec, n)
            if inject_fault and not faulted:
                closed += 1
                faulted = True
            series = phi_via_series(spec, n)
            conv = phi_convolve(spec, n)
            report.check(closed == series == conv,
                         f"{spec} n={n}: closed={closed} series={series} convolve={conv}")
            if n ** (spec.h + spec.k) <= enum_budget:
                tally = enumerate_differences(spec.h, spec.k, spec.m, n, enum_budget)
                report.check(tally.get(spec.c, 0) == conv,
                             f"{spec} n={n}: enumerate={tally.get(spec.c, 0)} convolve={conv}")
            report.check(conv == phi_convolve(spec.mirrored(), n),
                         f"{spec} n={n}: mirror symmetry")
            if spec.h == spec.k and spec.m != 0:
                report.check(conv == phi_convolve(ProblemSpec(spec.h, spec.k, 0, spec.c), n),
                             f"{spec} n={n}: translation invariance")
            lo, hi = positivity_range(spec.h, spec.k, spec.m, n)
            report.check((conv > 0) == (lo <= spec.c <= hi),
                         f"{spec} n={n}: positivity range [{lo}, {hi}]")
            if n >= n_threshold(spec):
                report.check(u0(spec, n) == u0_fixed(spec), f"{spec} n={n}: u0 not settled")

        g = growth_polynomial(spec)
        N = spec.h + spec.k
        report.check(g.poly.degree == N - 1 and 0 < g.poly.leading <= 1,
                     f"{spec}: growth polynomial degree/leading {g.poly}")
        report.check(g.n0_empirical <= g.n0_paper, f"{spec}: n0_empirical > n0_paper")
        for n in range(g.n0_empirical, max(grid.max_n, g.n0_paper + N) + 1):
            if poly_eval(g.poly, n) != phi_convolve(spec, n):
                report.check(False, f"{spec} n={n}: growth polynomial mismatch")
                break
        else:
            report.check(True, "")

    for total in range(2, grid.max_hk + 1):
        for h in range(1, total):
            for n in ns:
                s = sum(phi_convolve(ProblemSpec(h, total - h, 0, c), n)
                        for c in range(-(total - h) * (n - 1), h * (n - 1) + 1))
                report.check(s == n ** total, f"h={h} k={total - h} n={n}: total count {s}")

    for h in range(1, 8):
        p = psi_polynomial(h)
        report.check(all(c == 0 for c in p.coeffs[::2]), f"psi_{h} has an even power")
    return report
