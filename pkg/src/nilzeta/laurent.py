"""Exact integer-coefficient Laurent polynomials in two formal variables q and t.

The variable t stands in for q**(-s); all zeta formulas in this package are
quotients of these polynomials.  A polynomial is a map from exponent pairs
(eq, et) to nonzero arbitrary-precision integers, kept in canonical form:
no zero coefficients are stored and the term order used for serialization
and rendering is lexicographic on (et, eq).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable Laurent polynomial in q and t over the integers."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        data: dict[tuple[int, int], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            if not c:
                continue
            key = (int(key[0]), int(key[1]))
            acc = data.get(key, 0) + c
            if acc:
                data[key] = acc
            elif key in data:
                del data[key]
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: int, q: int = 0, t: int = 0) -> "LaurentPoly":
        return cls({(q, t): coeff})

    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        """Terms in the canonical (et, eq) lexicographic order."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def coefficient(self, q: int, t: int) -> int:
        return self._terms.get((q, t), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        out = dict(self._terms)
        for key, c in other._terms.items():
            acc = out.get(key, 0) + c
            if acc:
                out[key] = acc
            else:
                del out[key]
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.term(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, int], int] = {}
        for (qa, ta), ca in a.items():
            for (qb, tb), cb in b.items():
                key = (qa + qb, ta + tb)
                acc = out.get(key, 0) + ca * cb
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of polynomials are not defined")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def t_min(self) -> int:
        return min(et for (_, et) in self._terms)

    def t_max(self) -> int:
        return max(et for (_, et) in self._terms)

    def invert_vars(self) -> "LaurentPoly":
        """Substitute q -> 1/q and t -> 1/t simultaneously."""
        return LaurentPoly({(-eq, -et): c for (eq, et), c in self._terms.items()})

    def subs_t_one(self) -> "LaurentPoly":
        """Evaluate at t = 1, leaving a Laurent polynomial in q alone."""
        out: dict[tuple[int, int], int] = {}
        for (eq, _), c in self._terms.items():
            key = (eq, 0)
            acc = out.get(key, 0) + c
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
        return LaurentPoly(out)

    def value_at_q(self, q_value) -> Fraction:
        """Evaluate a polynomial in q alone at a concrete value, exactly."""
        total = Fraction(0)
        for (eq, et), c in self._terms.items():
            if et:
                raise ValueError("value_at_q requires a polynomial in q alone")
            total += c * Fraction(q_value) ** eq
        return total

    def constant_value(self) -> int:
        """The value of a constant polynomial (zero polynomial gives 0)."""
        if not self._terms:
            return 0
        if list(self._terms) != [(0, 0)]:
            raise ValueError("polynomial is not constant")
        return self._terms[(0, 0)]

    def __repr__(self) -> str:
        if not self._terms:
            return "LaurentPoly(0)"
        bits = []
        for (eq, et), c in self.sorted_terms():
            piece = []
            if abs(c) != 1 or (eq == 0 and et == 0):
                piece.append(str(abs(c)))
            if eq:
                piece.append("q" if eq == 1 else f"q^{eq}")
            if et:
                piece.append("t" if et == 1 else f"t^{et}")
            sign = "-" if c < 0 else "+"
            bits.append((sign, " ".join(piece)))
        first_sign, first = bits[0]
        text = (first_sign if first_sign == "-" else "") + first
        for sign, piece in bits[1:]:
            text += sign + piece
        return f"LaurentPoly({text})"


def divmod_one_minus(poly: LaurentPoly, a: int, b: int) -> tuple[LaurentPoly, LaurentPoly]:
    """Divide poly by (1 - q^a t^b) with b >= 1; returns (quotient, remainder).

    The remainder, after shifting to nonnegative t-exponents, has t-degree
    strictly below b, so divisibility is exactly `remainder == 0`.
    """
    if b < 1:
        raise ValueError("divisor must have positive t-exponent")
    if not poly:
        return LaurentPoly.zero(), LaurentPoly.zero()
    tmin = poly.t_min()
    work = {(eq, et - tmin): c for (eq, et), c in poly.terms().items()}
    quo: dict[tuple[int, int], int] = {}
    while work:
        etmax = max(et for (_, et) in work)
        if etmax < b:
            break
        for key in [k for k in work if k[1] == etmax]:
            eq, et = key
            c = work.pop(key)
            lower = (eq - a, et - b)
            acc = quo.get(lower, 0) - c
            if acc:
                quo[lower] = acc
            elif lower in quo:
                del quo[lower]
            acc = work.get(lower, 0) + c
            if acc:
                work[lower] = acc
            elif lower in work:
                del work[lower]
    quotient = LaurentPoly({(eq, et + tmin): c for (eq, et), c in quo.items()})
    remainder = LaurentPoly({(eq, et + tmin): c for (eq, et), c in work.items()})
    return quotient, remainder


def exact_div_one_minus_t(poly: LaurentPoly) -> LaurentPoly:
    """Exact division by (1 - t); raises if the division leaves a remainder."""
    quo, rem = divmod_one_minus(poly, 0, 1)
    if rem:
        raise ValueError("polynomial is not divisible by (1 - t)")
    return quo
