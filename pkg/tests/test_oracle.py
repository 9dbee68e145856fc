"""Enumeration oracles: HNF counts, ideal counts, census, SNF checks."""

import random

import pytest

from nilzeta.liering import abelian_structure, build_structure
from nilzeta.oracle import (
    CeilingExceededError,
    LatticeType,
    congruence_index_check,
    count_graded_ideals,
    count_graded_ideals_naive,
    count_ideals,
    count_ideals_naive,
    dirichlet_counts,
    hnf_contains,
    hnf_count,
    hnf_enumerate,
    maximal_lattice_census,
    rep_matrix_check,
    sample_antidiagonal,
    snf_valuations,
    type_from_valuations,
    verify_dirichlet,
)
from nilzeta.rational import rf_series_coeffs
from nilzeta.zetas import abelian_zeta, graded_ideal_zeta


def test_hnf_enumerate_small_counts():
    assert sum(1 for _ in hnf_enumerate(2, 2, 1)) == 3
    assert sum(1 for _ in hnf_enumerate(3, 2, 1)) == 7


def test_hnf_enumerate_distinct_and_canonical():
    seen = set()
    for basis in hnf_enumerate(3, 2, 3):
        assert basis.index_exponent(2) == 3
        for i in range(3):
            for j in range(3):
                if i > j:
                    assert basis.matrix[i][j] == 0
                elif i < j:
                    assert 0 <= basis.matrix[i][j] < basis.matrix[j][j]
        seen.add(basis.matrix)
    assert len(seen) == hnf_count(3, 2, 3)


@pytest.mark.parametrize("dim,p,kmax", [(2, 2, 4), (3, 2, 3), (2, 3, 3), (4, 2, 2), (3, 3, 2)])
def test_hnf_enumerate_matches_count(dim, p, kmax):
    for k in range(kmax + 1):
        assert sum(1 for _ in hnf_enumerate(dim, p, k)) == hnf_count(dim, p, k)


@pytest.mark.parametrize("dim", range(1, 8))
@pytest.mark.parametrize("p", [2, 3])
def test_hnf_count_matches_abelian_series(dim, p):
    coeffs = rf_series_coeffs(abelian_zeta(dim), 4)
    for k in range(5):
        assert hnf_count(dim, p, k) == coeffs[k].value_at_q(p)


def test_hnf_contains():
    matrix = ((2, 1, 0), (0, 1, 0), (0, 0, 4))
    assert hnf_contains(matrix, (2, 1, 0))
    assert hnf_contains(matrix, (0, 0, 4))
    assert hnf_contains(matrix, (2, 2, 4))
    assert not hnf_contains(matrix, (1, 0, 0))
    assert not hnf_contains(matrix, (0, 0, 2))
    assert hnf_contains(matrix, (-2, -1, -4))


def test_count_ideals_examples():
    heis = build_structure(1, 1)
    assert count_ideals(heis, 2, 0) == 1
    assert count_ideals(heis, 2, 1) == 3
    grenham = build_structure(1, 2)
    assert count_ideals(grenham, 2, 1) == 7


def test_count_graded_examples():
    heis = build_structure(1, 1)
    assert count_graded_ideals(heis, 2, 0) == 1
    assert count_graded_ideals(heis, 2, 1) == 3


@pytest.mark.parametrize(
    "m,n,p,kmax",
    [(1, 1, 2, 3), (1, 1, 3, 2), (1, 2, 2, 2), (2, 2, 2, 2), (1, 3, 2, 1), (2, 1, 2, 3)],
)
def test_fast_counts_match_naive(m, n, p, kmax):
    struct = build_structure(m, n)
    for k in range(kmax + 1):
        assert count_ideals(struct, p, k) == count_ideals_naive(struct, p, k)


@pytest.mark.parametrize("m,n,p,kmax", [(1, 1, 2, 3), (1, 2, 2, 2), (1, 2, 3, 2), (2, 2, 2, 2)])
def test_fast_graded_match_naive(m, n, p, kmax):
    struct = build_structure(m, n)
    for k in range(kmax + 1):
        assert count_graded_ideals(struct, p, k) == count_graded_ideals_naive(struct, p, k)


@pytest.mark.parametrize("m,n", [(1, 1), (1, 2), (2, 2)])
def test_abelian_structure_counts_all_sublattices(m, n):
    struct = abelian_structure(m, n)
    h = struct.dims.h
    for p in (2, 3):
        for k in range(4):
            assert count_ideals(struct, p, k) == hnf_count(h, p, k)


def test_dirichlet_counts_threads_deterministic():
    struct = build_structure(1, 2)
    assert dirichlet_counts(struct, 2, 4, threads=1) == dirichlet_counts(struct, 2, 4, threads=3)


def test_verify_dirichlet_grenham():
    records = verify_dirichlet(1, 2, 2, 4)
    assert [(r.k, r.oracle) for r in records] == [(0, 1), (1, 7), (2, 35), (3, 179), (4, 819)]
    assert all(r.match for r in records)


def test_verify_dirichlet_graded():
    records = verify_dirichlet(1, 2, 3, 3, graded=True)
    assert all(r.match for r in records)
    coeffs = rf_series_coeffs(graded_ideal_zeta(1, 2), 3)
    assert [r.formula for r in records] == [coeffs[k].value_at_q(3) for k in range(4)]


def test_verify_dirichlet_ceiling():
    with pytest.raises(CeilingExceededError) as err:
        verify_dirichlet(2, 3, 2, 6, ceiling=10**6)
    assert err.value.estimate == 2 ** (6 * 11)


def test_snf_valuations_examples():
    assert snf_valuations([[1, 0], [0, 1]], 2) == ((0, 0), 0)
    assert snf_valuations([[1, 0, 0], [0, 2, 0], [0, 0, 4]], 2) == ((0, 1, 2), 0)
    # border matrix at a primitive vector: rank 2 with unit divisors
    assert snf_valuations([[0, -1, 0], [1, 0, 0], [0, 0, 0]], 3) == ((0, 0), 1)


def test_snf_valuations_needs_combination():
    # entries with no pivot dividing its row/column force gcd steps
    vals, zero = snf_valuations([[4, 6], [6, 4]], 2)
    assert zero == 0
    assert vals == (1, 1)  # divisors 2 and 10 up to units


def test_snf_valuations_rectangular():
    vals, zero = snf_valuations([[2, 0, 0, 4], [0, 3, 0, 6]], 2)
    assert zero == 0
    assert vals == (0, 1)


def test_lattice_type_helpers():
    t = type_from_valuations((0, 1, 3))
    assert t == LatticeType(positions=(1, 2), jumps=(1, 2))
    assert t.r_total() == 3
    assert t.w(3) == 1 * 2 + 2 * 1
    with pytest.raises(ValueError):
        type_from_valuations((1, 2))
    with pytest.raises(ValueError):
        LatticeType(positions=(1,), jumps=(0,))


def test_census_examples():
    counts = maximal_lattice_census(2, 2, 1)
    assert counts[LatticeType((1,), (1,))] == 3
    counts = maximal_lattice_census(3, 2, 1)
    assert counts[LatticeType((2,), (1,))] == 7
    counts = maximal_lattice_census(2, 3, 2)
    assert counts[LatticeType((1,), (2,))] == 12


@pytest.mark.parametrize("n,p", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_census_full_grid(n, p):
    # the census itself asserts every reported count against the closed form
    counts = maximal_lattice_census(n, p, 2)
    assert counts[LatticeType((), ())] == 1
    assert all(all(r <= 2 for r in t.jumps) for t in counts)


@pytest.mark.parametrize("n,p", [(2, 2), (3, 2), (3, 3)])
def test_census_totals_against_direct_maximality(n, p):
    rmax = 2
    counts = maximal_lattice_census(n, p, rmax)
    bound = (n - 1) * rmax
    by_w: dict[int, int] = {}
    for t, c in counts.items():
        by_w[t.w(n)] = by_w.get(t.w(n), 0) + c
    for k in range(bound + 1):
        direct = 0
        truncated = 0
        for basis in hnf_enumerate(n, p, k):
            vals, _ = snf_valuations(basis.matrix, p)
            if vals[0] != 0:
                continue
            direct += 1
            if all(r <= rmax for r in type_from_valuations(vals).jumps):
                truncated += 1
        assert by_w.get(k, 0) == truncated
        if k <= rmax:
            # no truncation can occur below the single-jump bound
            assert direct == truncated


def test_antidiagonal_shape():
    rng = random.Random(99)
    rep = sample_antidiagonal(4, 3, 3, rng)
    for i in range(4):
        anti = 4 - 1 - i
        assert rep.matrix[i][anti] % 3 != 0
        for j in range(anti):
            assert rep.matrix[i][j] == 0


def test_congruence_trivial_type():
    assert congruence_index_check(1, 2, LatticeType((), ()), 2, seed=5)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_congruence_grenham_single_jump(p):
    # two linear conditions mod p: index p^2 = formula value
    for seed in range(10):
        assert congruence_index_check(1, 2, LatticeType((1,), (1,)), p, seed)


def test_congruence_23_full_type():
    for seed in range(100):
        assert congruence_index_check(2, 3, LatticeType((1, 2), (1, 1)), 2, seed)


def test_congruence_deterministic_in_seed():
    t = LatticeType((1,), (2,))
    assert congruence_index_check(2, 2, t, 3, 42) == congruence_index_check(2, 2, t, 3, 42)


def test_rep_matrix_check_examples():
    for seed in range(20):
        assert rep_matrix_check(1, 1, 2, 1, seed)
    for seed in range(50):
        assert rep_matrix_check(1, 2, 3, 2, seed)
    for seed in range(50):
        assert rep_matrix_check(2, 3, 2, 3, seed)


def test_ideal_series_matches_formula_more_pairs():
    for m, n, p, upto in [(2, 1, 3, 4), (2, 2, 2, 3), (1, 3, 2, 2)]:
        records = verify_dirichlet(m, n, p, upto)
        assert all(r.match for r in records)
