"""Laurent polynomial arithmetic: exactness, canonical form, division helper."""

import pytest

from nilzeta.laurent import LaurentPoly, divmod_one_minus, exact_div_one_minus_t


def test_difference_of_squares():
    left = LaurentPoly({(0, 0): 1, (1, 1): -1})
    right = LaurentPoly({(0, 0): 1, (1, 1): 1})
    assert left * right == LaurentPoly({(0, 0): 1, (2, 2): -1})


def test_multiplicative_identity():
    p = LaurentPoly({(0, 0): 3, (2, -1): -5, (-4, 7): 1})
    assert p * LaurentPoly.one() == p


def test_negative_exponents_preserved():
    # (1 + q^-1 t^-1) * q t = q t + 1, expanded by hand
    p = LaurentPoly({(0, 0): 1, (-1, -1): 1})
    assert p * LaurentPoly.term(1, 1, 1) == LaurentPoly({(1, 1): 1, (0, 0): 1})


def test_canonical_no_zero_coefficients():
    p = LaurentPoly({(0, 0): 1, (1, 0): 0})
    assert p.terms() == {(0, 0): 1}
    assert (p - p) == LaurentPoly.zero()
    assert not (p - p)


def test_constructor_merges_duplicate_keys():
    p = LaurentPoly([((1, 2), 3), ((1, 2), -3), ((0, 0), 1)])
    assert p.terms() == {(0, 0): 1}


def test_structural_equality_is_representation_independent():
    a = LaurentPoly({(0, 0): 1, (1, 1): 2})
    b = LaurentPoly({(1, 1): 2, (0, 0): 1})
    assert a == b and hash(a) == hash(b)


def test_sorted_terms_order():
    p = LaurentPoly({(5, 0): 1, (0, 1): 1, (-2, 1): 1, (0, 0): 1})
    keys = [key for key, _ in p.sorted_terms()]
    assert keys == [(0, 0), (5, 0), (-2, 1), (0, 1)]


def test_addition_and_negation():
    p = LaurentPoly({(1, 0): 2})
    q = LaurentPoly({(1, 0): -2, (0, 3): 1})
    assert p + q == LaurentPoly({(0, 3): 1})
    assert -(p + q) == LaurentPoly({(0, 3): -1})
    assert p - p == LaurentPoly.zero()


def test_power():
    base = LaurentPoly({(0, 0): 1, (0, 1): -1})
    assert base**0 == LaurentPoly.one()
    assert base**2 == LaurentPoly({(0, 0): 1, (0, 1): -2, (0, 2): 1})
    with pytest.raises(ValueError):
        base ** (-1)


def test_invert_vars_and_subs():
    p = LaurentPoly({(2, 3): 5, (-1, 0): 1})
    assert p.invert_vars() == LaurentPoly({(-2, -3): 5, (1, 0): 1})
    assert p.subs_t_one() == LaurentPoly({(2, 0): 5, (-1, 0): 1})


def test_value_at_q():
    from fractions import Fraction

    p = LaurentPoly({(2, 0): 1, (-1, 0): 1})
    assert p.value_at_q(2) == Fraction(9, 2)
    with pytest.raises(ValueError):
        LaurentPoly({(0, 1): 1}).value_at_q(2)


def test_divmod_one_minus_exact():
    # (1 - t^3) = (1 - t)(1 + t + t^2)
    p = LaurentPoly({(0, 0): 1, (0, 3): -1})
    quo, rem = divmod_one_minus(p, 0, 1)
    assert rem == LaurentPoly.zero()
    assert quo == LaurentPoly({(0, 0): 1, (0, 1): 1, (0, 2): 1})


def test_divmod_one_minus_remainder():
    p = LaurentPoly({(0, 0): 1, (1, 1): -1})  # 1 - q t
    quo, rem = divmod_one_minus(p, 0, 1)
    assert quo * LaurentPoly({(0, 0): 1, (0, 1): -1}) + rem == p
    assert rem == LaurentPoly({(1, 0): -1, (0, 0): 1})
    with pytest.raises(ValueError):
        exact_div_one_minus_t(p)


def test_divmod_general_monomial():
    divisor = LaurentPoly({(0, 0): 1, (2, 3): -1})
    quo = LaurentPoly({(1, 1): 4, (-2, 0): 7})
    p = quo * divisor
    got_quo, got_rem = divmod_one_minus(p, 2, 3)
    assert got_rem == LaurentPoly.zero()
    assert got_quo == quo


def test_divmod_laurent_shift():
    # divisibility is unaffected by a monomial shift into negative exponents
    divisor = LaurentPoly({(0, 0): 1, (1, 2): -1})
    quo = LaurentPoly({(-3, -5): 2, (0, 0): 1})
    p = quo * divisor
    got_quo, got_rem = divmod_one_minus(p, 1, 2)
    assert got_rem == LaurentPoly.zero()
    assert got_quo == quo
