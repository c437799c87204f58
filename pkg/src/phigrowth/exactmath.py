"""Exact integer/rational substrate: binomials, dense polynomials, interpolation.

Integers are plain Python ``int`` (arbitrary precision) and rationals are
``fractions.Fraction``, which is always gcd-reduced with a positive
denominator.  Polynomials are dense over the rationals in a single
variable ``n``.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


def binomial(x: int, d: int) -> int:
    """Falling-factorial binomial ``x (x-1) ... (x-d+1) / d!``.

    Defined for every integer ``x``, including negative ones, e.g.
    ``binomial(-1, 2) == 1``.
    """
    if d < 0:
        raise ValueError(f"binomial lower argument must be >= 0, got {d}")
    if x >= 0:
        return math.comb(x, d)
    # upper negation: C(x, d) = (-1)^d C(d - x - 1, d)
    value = math.comb(d - x - 1, d)
    return -value if d % 2 else value


def choose(x: int, d: int) -> int:
    """Combinatorial binomial: zero whenever ``x < d`` (negative ``x`` included)."""
    if d < 0 or x < d:
        return 0
    return math.comb(x, d)


def rat_str(q: Number) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Fraction:
    return Fraction(text.strip())


class Poly:
    """Dense univariate polynomial over the rationals.

    ``coeffs[i]`` is the coefficient of ``n**i``.  Trailing zeros are
    stripped on construction, so equality is structural and the zero
    polynomial has no coefficients and ``degree`` ``None``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, value: Number) -> Poly:
        return cls([value])

    @classmethod
    def monomial(cls, exponent: int, coeff: Number = 1) -> Poly:
        return cls([0] * exponent + [coeff])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, exponent: int) -> Fraction:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Poly | Number) -> Poly:
        other = _as_poly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: Poly | Number) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: Number) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other: Poly | Number) -> Poly:
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, n: Number) -> Fraction:
        return poly_eval(self, n)

    def __repr__(self) -> str:
        return f"Poly({self.to_str()!r})"

    def __str__(self) -> str:
        return self.to_str()

    def to_str(self, var: str = "n") -> str:
        """Descending human form, e.g. ``11/24*n^4 + 1/4*n^3 - 6006``."""
        terms = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = rat_str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{rat_str(mag)}*{power}"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json_map(self) -> dict[str, str]:
        """Exponent -> "p/q" map with only nonzero coefficients."""
        return {str(e): rat_str(c) for e, c in enumerate(self.coeffs) if c}

    def to_json(self) -> str:
        return json.dumps(self.to_json_map(), sort_keys=True)

    @classmethod
    def from_json_map(cls, data: dict) -> Poly:
        if not data:
            return cls()
        size = max(int(e) for e in data) + 1
        cs = [Fraction(0)] * size
        for e, c in data.items():
            cs[int(e)] = Fraction(str(c))
        return cls(cs)


def _as_poly(value: Poly | Number) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


def poly_eval(p: Poly, n: Number) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * n + c
    return acc


def binomial_linear_poly(a: int, b: int, d: int) -> Poly:
    """Expand ``binomial(a*n + b, d)`` as a polynomial in ``n``.

    Agrees with :func:`binomial` at every integer ``n``, negative upper
    arguments included.
    """
    if d < 0:
        raise ValueError(f"degree must be >= 0, got {d}")
    # integer product first, one division by d! at the end
    prod = [1]
    for j in range(d):
        nxt = [0] * (len(prod) + 1)
        for i, c in enumerate(prod):
            nxt[i] += c * (b - j)
            nxt[i + 1] += c * a
        prod = nxt
    fact = math.factorial(d)
    return Poly(Fraction(c, fact) for c in prod)


class InterpolationError(ValueError):
    pass


def lagrange_interpolate(points: Sequence[tuple[Number, Number]]) -> Poly:
    """Unique polynomial of degree < len(points) through ``points``."""
    if not points:
        raise InterpolationError("need at least one sample point")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InterpolationError("duplicate abscissa in sample set")
    result = Poly()
    for i, (xi, (_, yi)) in enumerate(zip(xs, points)):
        basis = Poly.constant(1)
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly([-xj, 1])
                denom *= xi - xj
        result = result + basis * (Fraction(yi) / denom)
    return result
