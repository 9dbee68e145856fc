"""Univariate rational functions kept as a constant times integer linear factors.

Used for the topological zeta functions, which live in a single variable s
with exact rational coefficients.  A value is

    const * prod(b*s - a  for (b, a) in num_factors)
          / prod(b*s - a  for (b, a) in den_factors);

integer content of each factor is pulled into the constant, so e.g.
6/((12s-27)(10s-20)) normalizes to 1/(5*(4s-9)(s-2)).  Equality is
mathematical, by cross-multiplied expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def _expand(factors: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
    """Expand prod(b*s - a) into coefficients, low degree first."""
    coeffs = [1]
    for b, a in factors:
        new = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i] -= a * c
            new[i + 1] += b * c
        coeffs = new
    return tuple(coeffs)


@dataclass(frozen=True)
class LinearFactorRational:
    const: Fraction
    num_factors: tuple[tuple[int, int], ...]
    den_factors: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, const, num_factors=(), den_factors=()) -> "LinearFactorRational":
        c = Fraction(const)
        nf = []
        for b, a in num_factors:
            if b <= 0:
                raise ValueError("leading coefficient of a linear factor must be positive")
            g = gcd(b, a)
            c *= g
            nf.append((b // g, a // g))
        df = []
        for b, a in den_factors:
            if b <= 0:
                raise ValueError("leading coefficient of a linear factor must be positive")
            g = gcd(b, a)
            c /= g
            df.append((b // g, a // g))
        return cls(c, tuple(nf), tuple(df))

    def degree(self) -> int:
        if self.const == 0:
            raise ValueError("zero rational function has no degree")
        return len(self.num_factors) - len(self.den_factors)

    def equal(self, other: "LinearFactorRational") -> bool:
        left = _expand(self.num_factors + other.den_factors)
        right = _expand(other.num_factors + self.den_factors)
        an, ad = self.const.numerator, self.const.denominator
        bn, bd = other.const.numerator, other.const.denominator
        width = max(len(left), len(right))
        left = tuple(an * bd * c for c in left) + (0,) * (width - len(left))
        right = tuple(bn * ad * c for c in right) + (0,) * (width - len(right))
        return left == right

    def eval(self, s) -> Fraction:
        value = self.const
        for b, a in self.num_factors:
            value *= b * Fraction(s) - a
        for b, a in self.den_factors:
            factor = b * Fraction(s) - a
            if factor == 0:
                raise ZeroDivisionError(f"pole at s = {s}")
            value /= factor
        return value

    def scaled_infinity_limit(self, power: int) -> Fraction:
        """Exact limit of s**power * self as s -> oo; requires degree == -power."""
        if self.degree() != -power:
            raise ValueError("s**power * value does not have a finite nonzero limit")
        value = self.const
        for b, _ in self.num_factors:
            value *= b
        for b, _ in self.den_factors:
            value /= b
        return value
