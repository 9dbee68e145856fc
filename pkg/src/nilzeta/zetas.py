"""Closed-form zeta functions and analytic invariants for the rings L(m, n).

Everything here is assembled from the Igusa layer.  The central object is
the local ideal zeta function at residue cardinality q,

    zeta(m, n) = zeta_ab(d) * I_n(1/q; (q^{a_i} t^{b_i})_{i = n-1..0}),

with index data a_i = (n-i)(i+d) and b_i = n-i+e+sum_{j>i} e(m, j).  The
same skeleton with a_i replaced by i(n-i) gives the graded variant; the
topological and reduced degenerations and the one-factor representation
zeta function are derived alongside.

The variable s never appears in bivariate objects; it is confined to the
two topological forms, which carry exact rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combinat import LieDims, lie_dims, e_count
from .igusa import IgusaData, igusa_permutation, igusa_reduced, igusa_topological
from .laurent import LaurentPoly
from .rational import (
    RationalFunction,
    rf_equal,
    rf_invert_vars,
    rf_limit_t1,
)
from .univariate import LinearFactorRational


@dataclass(frozen=True)
class NumericalData:
    """Exponent pairs (a_i, b_i), i = 0..n-1, feeding the Igusa function."""

    m: int
    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]


def numerical_data(m: int, n: int) -> NumericalData:
    dims = lie_dims(m, n)
    a = tuple((n - i) * (i + dims.d) for i in range(n))
    b = tuple(
        n - i + dims.e + sum(e_count(m, j) for j in range(i + 1, n + 1)) for i in range(n)
    )
    if a[0] != dims.d * n or b[0] != dims.h:
        raise AssertionError("index data fails the (d*n, h) anchor")
    return NumericalData(m=m, n=n, a=a, b=b)


def abelian_zeta(d: int) -> RationalFunction:
    """Submodule-counting zeta function of the free module of rank d."""
    if d < 1:
        raise ValueError("rank must be positive")
    return RationalFunction(LaurentPoly.one(), [(i, 1, 1) for i in range(d)])


def _igusa_part(m: int, n: int, a: tuple[int, ...], b: tuple[int, ...]) -> RationalFunction:
    # X_j uses the data at index n-j: the tuple is passed from i = n-1 down to 0.
    x = tuple((a[n - j], b[n - j]) for j in range(1, n + 1))
    return igusa_permutation(IgusaData(n=n, y_qexp=-1, x=x))


def ideal_zeta(m: int, n: int) -> RationalFunction:
    dims = lie_dims(m, n)
    nd = numerical_data(m, n)
    return abelian_zeta(dims.d) * _igusa_part(m, n, nd.a, nd.b)


def graded_ideal_zeta(m: int, n: int) -> RationalFunction:
    """Ideal count of the associated graded ring: same b_i, q-exponent i(n-i)."""
    dims = lie_dims(m, n)
    nd = numerical_data(m, n)
    graded_a = tuple(i * (n - i) for i in range(n))
    return abelian_zeta(dims.d) * _igusa_part(m, n, graded_a, nd.b)


def rep_zeta(m: int, n: int) -> tuple[RationalFunction, LinearFactorRational]:
    """Local and topological twist-isoclass counting zeta functions.

    The local Euler factor is (1 - t^e)/(1 - q^n t^e); its topological
    limit is s*e/(s*e - n).
    """
    dims = lie_dims(m, n)
    local = RationalFunction(
        LaurentPoly({(0, 0): 1, (0, dims.e): -1}), [(n, dims.e, 1)]
    )
    topological = LinearFactorRational.make(1, ((dims.e, 0),), ((dims.e, n),))
    return local, topological


def topological_ideal_zeta(m: int, n: int) -> LinearFactorRational:
    dims = lie_dims(m, n)
    nd = numerical_data(m, n)
    abelian_factors = tuple((1, j) for j in range(dims.d))
    igusa = igusa_topological(n, nd.a, nd.b)
    return LinearFactorRational.make(
        igusa.const, igusa.num_factors, abelian_factors + igusa.den_factors
    )


def reduced_ideal_zeta(m: int, n: int) -> tuple[RationalFunction, Fraction]:
    """The Y-specialization (stored over t) and its residue mu = n!/prod(b_i).

    Checks that the full pole at Y = 1 has order h, that clearing it leaves
    exactly mu, and that mu * h! is an integer.
    """
    dims = lie_dims(m, n)
    nd = numerical_data(m, n)
    bx = tuple(nd.b[n - j] for j in range(1, n + 1))
    base = igusa_reduced(n, bx)
    fn = RationalFunction(base.num, list(base.den) + [(0, 1, dims.d)])
    mu = Fraction(factorial(n))
    for bi in nd.b:
        mu /= bi
    pole_order = sum(f.mult for f in fn.den if f.a == 0)
    if pole_order != dims.h:
        raise AssertionError("pole order at Y = 1 is not h")
    # Residue: every factor (1 - Y^b) contributes one (1 - Y) and a cofactor
    # evaluating to b at Y = 1; the numerator evaluates to n!.
    residue = Fraction(fn.num.subs_t_one().constant_value())
    for f in fn.den:
        residue /= f.b ** f.mult
    if residue != mu:
        raise AssertionError("residue at Y = 1 does not equal n!/prod(b_i)")
    if (mu * factorial(dims.h)).denominator != 1:
        raise AssertionError("mu * h! is not an integer")
    return fn, mu


def analytic_invariants(m: int, n: int) -> tuple[int, Fraction]:
    """Abscissa of convergence alpha = d and the continuation bound beta.

    beta is the largest (a_i - 1)/b_i over the data indices that occur in
    numerator descent products, i.e. i = 1..n-1; for n = 1 the single
    denominator datum (a_0 - 1)/b_0 is used.
    """
    dims = lie_dims(m, n)
    nd = numerical_data(m, n)
    indices = range(1, n) if n >= 2 else range(1)
    beta = max(Fraction(nd.a[i] - 1, nd.b[i]) for i in indices)
    return dims.d, beta


def check_functional_equation(m: int, n: int) -> bool:
    """Inverting q and t multiplies the ideal zeta function by
    (-1)^h q^C(h,2) t^(d+h)."""
    dims = lie_dims(m, n)
    z = ideal_zeta(m, n)
    inverted = rf_invert_vars(z)
    sign = -1 if dims.h % 2 else 1
    target = z.times_poly(LaurentPoly.term(sign, comb(dims.h, 2), dims.d + dims.h))
    return rf_equal(inverted, target)


def check_zero_behaviour(m: int, n: int) -> tuple[bool, bool]:
    """Behaviour at t = 1 (that is, s = 0).

    pad:    ideal zeta over the rank-h abelian zeta tends to 1;
    graded: graded zeta over abelian(d) * abelian(n) tends to n/h,
            a constant free of q.
    """
    dims = lie_dims(m, n)
    pad_ratio = ideal_zeta(m, n).divided_by(abelian_zeta(dims.h))
    pad = rf_limit_t1(pad_ratio).equal(1)
    graded_ratio = graded_ideal_zeta(m, n).divided_by(
        abelian_zeta(dims.d) * abelian_zeta(n)
    )
    graded = rf_limit_t1(graded_ratio).equal(Fraction(n, dims.h))
    return pad, graded


@dataclass(frozen=True)
class ZetaReport:
    """Everything this package computes for one pair (m, n)."""

    dims: LieDims
    data: NumericalData
    ideal: RationalFunction
    graded: RationalFunction
    rep_local: RationalFunction
    rep_topological: LinearFactorRational
    topological: LinearFactorRational
    reduced: RationalFunction
    mu: Fraction
    alpha: int
    beta: Fraction


def zeta_report(m: int, n: int) -> ZetaReport:
    dims = lie_dims(m, n)
    nd = numerical_data(m, n)
    local, top_rep = rep_zeta(m, n)
    reduced, mu = reduced_ideal_zeta(m, n)
    alpha, beta = analytic_invariants(m, n)
    if mu <= 0:
        raise AssertionError("mu must be positive")
    if alpha != dims.d:
        raise AssertionError("alpha must equal d")
    return ZetaReport(
        dims=dims,
        data=nd,
        ideal=ideal_zeta(m, n),
        graded=graded_ideal_zeta(m, n),
        rep_local=local,
        rep_topological=top_rep,
        topological=topological_ideal_zeta(m, n),
        reduced=reduced,
        mu=mu,
        alpha=alpha,
        beta=beta,
    )
