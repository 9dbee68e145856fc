"""Permutation statistics, Gaussian q-binomials, and ordered composition sets.

Permutations of [n] are one-line tuples; the length statistic is the
inversion count and descents are the positions i in [n-1] with
w(i+1) < w(i).  Univariate polynomials in the Gaussian parameter Y are
plain coefficient tuples, low degree first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator


def permutations_with_stats(n: int) -> Iterator[tuple[tuple[int, ...], int, tuple[int, ...]]]:
    """Yield (w, length, descents) for every w in S_n, in lexicographic order.

    Descents are reported as a sorted tuple of positions, which keeps the
    iteration order (and every numerator built from it) reproducible.
    """
    if n < 1:
        raise ValueError("n must be positive")
    for w in itertools.permutations(range(1, n + 1)):
        length = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
        descents = tuple(i + 1 for i in range(n - 1) if w[i + 1] < w[i])
        yield w, length, descents


def poly_mul(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def poly_exact_div(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Exact polynomial long division; raises if a remainder is left."""
    rem = list(p)
    while len(rem) > 1 and rem[-1] == 0:
        rem.pop()
    div = list(q)
    while len(div) > 1 and div[-1] == 0:
        div.pop()
    if div == [0]:
        raise ZeroDivisionError("division by the zero polynomial")
    if rem == [0]:
        return (0,)
    out = [0] * (len(rem) - len(div) + 1)
    for top in range(len(rem) - 1, len(div) - 2, -1):
        c, r = divmod(rem[top], div[-1])
        if r:
            raise ValueError("polynomial division is not exact")
        pos = top - (len(div) - 1)
        out[pos] = c
        for j, b in enumerate(div):
            rem[pos + j] -= c * b
    if any(rem):
        raise ValueError("polynomial division is not exact")
    return tuple(out)


def one_minus_y_power(i: int) -> tuple[int, ...]:
    """Coefficients of 1 - Y^i."""
    out = [0] * (i + 1)
    out[0] = 1
    out[i] = -1
    return tuple(out)


def gaussian_binomial(a: int, b: int) -> tuple[int, ...]:
    """The Gaussian binomial (a choose b)_Y as a coefficient tuple.

    Computed as prod_{i=a-b+1..a}(1-Y^i) / prod_{i=1..b}(1-Y^i); the
    division is verified exact rather than trusted.
    """
    if a < 0 or b < 0:
        raise ValueError("arguments must be nonnegative")
    if a < b:
        raise ValueError(f"need a >= b, got ({a}, {b})")
    if b == 0:
        return (1,)
    num = (1,)
    for i in range(a - b + 1, a + 1):
        num = poly_mul(num, one_minus_y_power(i))
    den = (1,)
    for i in range(1, b + 1):
        den = poly_mul(den, one_minus_y_power(i))
    return poly_exact_div(num, den)


def gaussian_multinomial(n: int, subset) -> tuple[int, ...]:
    """The Gaussian multinomial (n choose I)_Y for I a subset of [n].

    Telescopes over the increasing chain of I:
    (n choose i_l)(i_l choose i_{l-1}) ... (i_2 choose i_1).
    """
    chain = sorted(subset)
    if any(i < 1 or i > n for i in chain):
        raise ValueError("subset must lie in [n]")
    if len(set(chain)) != len(chain):
        raise ValueError("subset entries must be distinct")
    out = (1,)
    upper = n
    for i in reversed(chain):
        out = poly_mul(out, gaussian_binomial(upper, i))
        upper = i
    return out


def compositions_revlex(total: int, n: int) -> list[tuple[int, ...]]:
    """All vectors in N_0^n with coordinate sum `total`, largest-lex first."""
    if n < 1:
        raise ValueError("n must be positive")
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, slots: int):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for first in range(remaining, -1, -1):
            rec(prefix + (first,), remaining - first, slots - 1)

    rec((), total, n)
    return out


@dataclass(frozen=True)
class LieDims:
    """Ranks attached to the pair (m, n): e, f count the two generator layers,
    d = e + f is the abelianization rank, h = d + n the total rank."""

    m: int
    n: int
    e: int
    f: int
    d: int
    h: int


def e_count(m: int, n: int) -> int:
    return comb(n + m - 2, n - 1)


def f_count(m: int, n: int) -> int:
    return comb(n + m - 1, n - 1)


def lie_dims(m: int, n: int) -> LieDims:
    """Compute (e, f, d, h) for the pair (m, n) and sanity-check the binomial
    identities relating adjacent parameters."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    e = e_count(m, n)
    f = f_count(m, n)
    d = e + f
    h = d + n
    if n >= 2:
        if sum(e_count(j, n - 1) for j in range(1, m + 1)) != e:
            raise AssertionError("column identity for e failed")
        if e + f_count(m, n - 1) != f:
            raise AssertionError("e + f identity failed")
    if sum(e_count(m, j) for j in range(1, n + 1)) != f:
        raise AssertionError("row identity for f failed")
    return LieDims(m=m, n=n, e=e, f=f, d=d, h=h)
