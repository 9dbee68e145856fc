"""Igusa functions: closed forms, form equivalence, degenerations."""

import random
from fractions import Fraction

from nilzeta.igusa import (
    IgusaData,
    igusa_middle,
    igusa_permutation,
    igusa_reduced,
    igusa_subset,
    igusa_topological,
)
from nilzeta.laurent import LaurentPoly
from nilzeta.rational import RationalFunction, rf_equal, rf_limit_t1
from nilzeta.univariate import LinearFactorRational


def data(n, x, y_qexp=-1):
    return IgusaData(n=n, y_qexp=y_qexp, x=tuple(x))


def test_degree_one_both_forms():
    d = data(1, [(2, 3)])
    expected = RationalFunction(LaurentPoly.one(), [(2, 3, 1)])
    assert rf_equal(igusa_subset(d), expected)
    assert rf_equal(igusa_permutation(d), expected)


def test_degree_two_closed_form():
    # numerator 1 + Y X_1 over (1-X_1)(1-X_2), here Y = q^-1
    d = data(2, [(4, 3), (6, 5)])
    expected = RationalFunction(
        LaurentPoly({(0, 0): 1, (3, 3): 1}), [(4, 3, 1), (6, 5, 1)]
    )
    assert rf_equal(igusa_subset(d), expected)
    assert rf_equal(igusa_permutation(d), expected)
    assert rf_equal(igusa_middle(d), expected)


def test_degree_three_published_numerator():
    d = data(3, [(11, 7), (20, 10), (27, 12)])
    out = igusa_subset(d)
    assert out.num == LaurentPoly(
        {(0, 0): 1, (9, 7): 1, (10, 7): 1, (18, 10): 1, (19, 10): 1, (28, 17): 1}
    )
    assert [(f.a, f.b) for f in out.den] == [(11, 7), (20, 10), (27, 12)]


def test_form_equivalence_randomized():
    rng = random.Random(20240)
    for n in range(1, 6):
        for _ in range(20):
            x = [(rng.randrange(0, 40), rng.randrange(1, 12)) for _ in range(n)]
            d = data(n, x)
            subset = igusa_subset(d)
            assert rf_equal(subset, igusa_permutation(d))
            assert rf_equal(subset, igusa_middle(d))


def test_topological_base_cases():
    z = igusa_topological(1, (0,), (1,))
    assert z.equal(LinearFactorRational.make(1, (), ((1, 0),)))
    z = igusa_topological(2, (4, 6), (3, 5))
    assert z.equal(LinearFactorRational.make(2, (), ((3, 4), (5, 6))))


def test_topological_leading_coefficient():
    rng = random.Random(5)
    for n in range(1, 5):
        a = tuple(rng.randrange(0, 9) for _ in range(n))
        b = tuple(rng.randrange(1, 7) for _ in range(n))
        z = igusa_topological(n, a, b)
        expected = Fraction(1)
        from math import factorial

        expected = Fraction(factorial(n))
        for bi in b:
            expected /= bi
        assert z.scaled_infinity_limit(n) == expected


def test_reduced_base_cases():
    z = igusa_reduced(1, (3,))
    assert z.num == LaurentPoly.one()
    assert [(f.a, f.b) for f in z.den] == [(0, 3)]
    z = igusa_reduced(2, (3, 5))
    assert z.num == LaurentPoly({(0, 0): 1, (0, 3): 1})
    assert [(f.a, f.b) for f in z.den] == [(0, 3), (0, 5)]


def test_reduced_published_numerator():
    z = igusa_reduced(3, (7, 10, 12))
    assert z.num == LaurentPoly({(0, 0): 1, (0, 7): 2, (0, 10): 2, (0, 17): 1})


def test_reduced_residue_product_rule():
    from math import factorial

    rng = random.Random(9)
    for n in range(1, 5):
        b = tuple(rng.randrange(1, 9) for _ in range(n))
        z = igusa_reduced(n, b)
        cleared = z.times_poly(LaurentPoly({(0, 0): 1, (0, 1): -1}) ** n)
        expected = Fraction(factorial(n))
        for bi in b:
            expected /= bi
        assert rf_limit_t1(cleared).equal(expected)


def test_numerator_shares_no_denominator_factor():
    # Experimental observation on the degree-3 production data: the numerator
    # is not divisible by any single denominator factor.
    from nilzeta.laurent import divmod_one_minus

    d = data(3, [(11, 7), (20, 10), (27, 12)])
    num = igusa_subset(d).num
    for a, b in d.x:
        _, rem = divmod_one_minus(num, a, b)
        assert rem
