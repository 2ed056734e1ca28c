"""Characteristic maxpolynomials, Gram machinery and column partitions."""

from __future__ import annotations

import random

import pytest

from conftest import SUM_LEFT, SUM_TOTAL, SYM_A, SYM_B, SYM_B_PRIME, WORKED_A, WORKED_B, poly
from maxplus import (
    EPS,
    MaxMatrix,
    MaxScalar,
    Permutation,
    char_poly,
    delta_ladder,
    eta_ladder,
    full_char_poly,
    functionally_leq,
    gen_matrix,
    gram,
    gram_char_poly,
    gram_permanent,
    hat,
    is_principally_dominant,
    max_column_partitions,
    norm,
    nu,
    permanent,
    principal_dominance_failure,
    shared_partition,
)


def test_char_poly_golden():
    assert char_poly(SYM_A) == poly(2, 2, 0)
    assert char_poly(SYM_B) == poly(20, 0, 0)
    assert char_poly(MaxMatrix([[7]])) == poly(7, 0)


def test_full_char_poly_golden():
    assert full_char_poly(SYM_B) == poly(20, 10, 0)
    assert full_char_poly(SYM_B).format_factored() == "(x (+) 10)^2"
    assert full_char_poly(SYM_A) == poly(2, 2, 0)
    assert full_char_poly(SYM_A).format_factored() == "(x (+) 2)(x (+) 0)"
    p0 = Permutation([1, 2, 0, 3])
    prod = WORKED_A @ WORKED_B.permute_rows(p0)
    assert full_char_poly(prod) == poly(10, 10, 8, 5, 0)
    assert full_char_poly(prod).format_factored() == "(x (+) 5)(x (+) 3)(x (+) 2)(x (+) 0)"


def test_nu_golden():
    assert nu(SYM_B) == MaxScalar(10)
    assert nu(SYM_A) == MaxScalar(2)
    assert nu(MaxMatrix.filled(3, 3, "-inf")) == EPS
    with pytest.raises(ValueError):
        nu(MaxMatrix([[1, 2, 3], [4, 5, 6]]))


def test_gram_and_hat():
    expected_hat = MaxMatrix(
        [
            [3, 2, "5/2", 2],
            [2, 1, "3/2", 1],
            ["5/2", "3/2", 2, "3/2"],
            [2, 1, "3/2", 2],
        ]
    )
    assert hat(WORKED_A.T) == expected_hat
    v = MaxMatrix([[1], [5], [2]])  # single column
    assert gram(v) == MaxMatrix([[10]])
    assert hat(v) == MaxMatrix([[5]])


def test_gram_char_poly_golden():
    assert gram_char_poly(WORKED_A.T) == poly(8, 7, 5, 3, 0)
    assert gram_char_poly(WORKED_B) == poly(2, 3, 3, 2, 0)
    diag = MaxMatrix([[3, "-inf"], ["-inf", 1]])
    assert gram_char_poly(diag) == poly(4, 3, 0)


def test_gram_properties_random():
    rng = random.Random(9)
    for _ in range(150):
        n = rng.randrange(1, 5)
        a = gen_matrix(n, eps_prob=rng.choice([0.0, 0.25]), seed=rng)
        g = gram(a)
        assert gram_char_poly(a) == char_poly(hat(a))
        assert permanent(g) == gram_permanent(a)
        assert is_principally_dominant(g)
        # maximal Gram minors: products of the k largest squared column norms
        squared = sorted((max(a.col(j)).scaled(2) for j in range(n)), reverse=True)
        etas = eta_ladder(g)
        for k in range(1, n + 1):
            expected = EPS
            if not squared[k - 1].is_eps:
                total = MaxScalar(0)
                for x in squared[:k]:
                    total = total * x
                expected = total
            assert etas[k] == expected
        # norm chain through the Hadamard roots
        assert norm(hat(a)) == norm(hat(a.T)) == norm(a) == nu(hat(a)) == nu(hat(a.T))


def test_gram_permanent_golden():
    assert gram_permanent(WORKED_A) == MaxScalar(16)
    assert gram_permanent(MaxMatrix([[5]])) == MaxScalar(10)
    d = MaxMatrix([[4, "-inf"], ["-inf", 7]])
    assert gram_permanent(d) == MaxScalar(22)


def test_principal_dominance_golden():
    assert is_principally_dominant(SYM_B_PRIME)
    assert is_principally_dominant(SYM_A)
    assert not is_principally_dominant(SYM_B)
    assert is_principally_dominant(SUM_LEFT)
    assert not is_principally_dominant(SUM_TOTAL)
    assert not is_principally_dominant(MaxMatrix([[0, 1], [1, 0]]))
    assert is_principally_dominant(MaxMatrix([[2, 1], [0, 0]]))
    assert principal_dominance_failure(SYM_B) == 1
    assert principal_dominance_failure(SUM_TOTAL) == 3


def test_char_poly_dominance_equivalence():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randrange(1, 5)
        a = gen_matrix(n, eps_prob=rng.choice([0.0, 0.3]), seed=rng)
        assert is_principally_dominant(a) == (char_poly(a) == full_char_poly(a))
        assert full_char_poly(a).is_fcf()
        assert functionally_leq(char_poly(a), full_char_poly(a))
        assert functionally_leq(full_char_poly(a), gram_char_poly(a))
        deltas = delta_ladder(a)
        etas = eta_ladder(a)
        assert all(d <= e for d, e in zip(deltas, etas))
        # eta_k(A) is the maximum of delta_k(A P) over all permutations
        for k in range(n + 1):
            best = EPS
            for pi in Permutation.all(n):
                best = best + delta_ladder(a.permute_cols(pi))[k]
            assert best == etas[k]


def test_coefficient_identities():
    from maxplus import delta, eta

    rng = random.Random(55)
    for _ in range(50):
        n = rng.randrange(1, 5)
        a = gen_matrix(n, eps_prob=0.25, seed=rng)
        cp, fp = char_poly(a), full_char_poly(a)
        for k in range(n + 1):
            assert cp.coeff(n - k) == delta(a, k)
            assert fp.coeff(n - k) == eta(a, k)


def test_symmetric_same_roots():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randrange(1, 5)
        raw = gen_matrix(n, eps_prob=0.25, seed=rng)
        sym = raw + raw.T  # symmetric by construction
        assert char_poly(sym).roots() == full_char_poly(sym).roots()


def test_partitions_golden():
    partitions, truncated = max_column_partitions(WORKED_B)
    assert not truncated
    assert sorted(p.format() for p in partitions) == ["{1,3},{2,4}", "{1},{2,4},{3}"]
    # distinct column maxima in distinct rows: all singletons
    singles, _ = max_column_partitions(MaxMatrix([[3, 0, 0], [0, 4, 1], [1, 2, 5]]))
    assert [p.format() for p in singles] == ["{1},{2},{3}"]
    # all column maxima in one row: the single block
    block, _ = max_column_partitions(MaxMatrix([[9, 9, 9], [0, 1, 2], [3, 2, 1]]))
    assert [p.format() for p in block] == ["{1,2,3}"]


def test_partitions_cap_and_ties():
    flat = MaxMatrix.filled(3, 3, 0)  # every choice ties
    partitions, truncated = max_column_partitions(flat, cap=4)
    assert truncated
    assert len(partitions) == 4
    full, truncated_full = max_column_partitions(flat, cap=64)
    assert not truncated_full
    # partitions of rank positions {1,2,3}: 5 set partitions, all realisable
    assert len(full) == 5
    with pytest.raises(ValueError):
        max_column_partitions(flat, cap=0)


def test_shared_partition_golden():
    sp = shared_partition(WORKED_A, WORKED_B)
    assert sp is not None
    assert sp.format() == "{1},{2,4},{3}"
    own = shared_partition(WORKED_B, WORKED_B.T)
    assert own is not None  # a matrix always shares a partition with its own transpose pair
    mismatch = shared_partition(
        MaxMatrix([[3, 0, 0], [0, 4, 1], [1, 2, 5]]),
        MaxMatrix([[9, 9, 9], [0, 1, 2], [3, 2, 1]]),
    )
    assert mismatch is None
    with pytest.raises(ValueError):
        shared_partition(WORKED_A, MaxMatrix([[1]]))
