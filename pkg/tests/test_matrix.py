"""Matrix arithmetic, permanents, minors and the matching kernel."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import SUM_LEFT, SUM_RIGHT, SUM_TOTAL, SYM_B, WORKED_A, WORKED_B
from maxplus import (
    EPS,
    CapExceededError,
    MaxMatrix,
    MaxScalar,
    ParseError,
    Permutation,
    delta,
    delta_bf,
    delta_ladder,
    dot,
    eta,
    eta_bf,
    eta_ladder,
    format_matrix,
    gen_matrix,
    norm,
    parse_matrix,
    permanent,
    permanent_bf,
)

P0B = MaxMatrix([[-2, 1, -1, -1], [-1, 0, -3, -1], [0, 0, -2, 2], [-1, -2, -1, 0]])


def test_mat_add_golden():
    assert SUM_LEFT + SUM_RIGHT == SUM_TOTAL


def test_mat_mul_identity():
    eye = MaxMatrix.identity(4)
    assert WORKED_A @ eye == WORKED_A
    assert eye @ WORKED_A == WORKED_A


def test_mat_mul_worked_product():
    expected = MaxMatrix([[3, 3, 1, 5], [1, 1, 0, 3], [2, 2, 0, 4], [1, 3, 1, 3]])
    assert WORKED_A @ P0B == expected


def test_hadamard_and_hpow():
    half = (WORKED_A @ WORKED_A.T).hpow("1/2")
    expected = MaxMatrix(
        [
            [3, 2, "5/2", 2],
            [2, 1, "3/2", 1],
            ["5/2", "3/2", 2, "3/2"],
            [2, 1, "3/2", 2],
        ]
    )
    assert half == expected
    zero = MaxMatrix.filled(4, 4, 0)
    assert WORKED_A.hadamard(zero) == WORKED_A
    assert WORKED_A.hpow(2).hpow("1/2") == WORKED_A
    with pytest.raises(ValueError):
        WORKED_A.hpow(0)
    with pytest.raises(ValueError):
        WORKED_A.hadamard(MaxMatrix.identity(3))


def test_shapes_and_transpose():
    a = MaxMatrix([[1, 2, 3], [4, 5, 6]])
    assert (a.rows, a.cols) == (2, 3)
    assert a.T.T == a
    assert a.T[0, 1] == MaxScalar(4)
    with pytest.raises(ValueError):
        a @ a
    with pytest.raises(ValueError):
        MaxMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        MaxMatrix([])


def test_permanent_golden():
    assert permanent(MaxMatrix([[2, "-inf"], ["-inf", 0]])) == MaxScalar(2)
    assert permanent(SYM_B) == MaxScalar(20)
    assert permanent(MaxMatrix([["-inf", 0], ["-inf", 0]])) == EPS
    with pytest.raises(ValueError):
        permanent(MaxMatrix([[1, 2, 3], [4, 5, 6]]))


def test_eta_golden():
    assert eta(SYM_B, 1) == MaxScalar(10)
    assert eta(MaxMatrix([[2, "-inf"], ["-inf", 0]]), 1) == MaxScalar(2)
    assert eta(SYM_B, 0) == MaxScalar(0)
    assert eta(SUM_TOTAL, 3) == MaxScalar(12)
    with pytest.raises(ValueError):
        eta(SYM_B, 3)


def test_delta_golden():
    assert delta(SYM_B, 1) == MaxScalar(0)
    assert delta(SYM_B, 2) == MaxScalar(20)
    assert delta(MaxMatrix([[2, "-inf"], ["-inf", 0]]), 1) == MaxScalar(2)
    with pytest.raises(ValueError):
        delta(SYM_B, -1)
    with pytest.raises(CapExceededError):
        delta(gen_matrix(13, seed=0), 2)


def test_norm_and_dot():
    assert norm(SYM_B) == MaxScalar(10)
    assert norm(MaxMatrix.filled(2, 2, "-inf")) == EPS
    u = [MaxScalar(1), EPS, MaxScalar(3)]
    v = [MaxScalar(0), MaxScalar(10), MaxScalar(2)]
    assert dot(u, v) == MaxScalar(5)
    with pytest.raises(ValueError):
        dot(u, v[:2])


def test_cauchy_bunyakovsky_schwarz():
    rng = random.Random(5)

    def draw_vector(n):
        return [
            EPS if rng.random() < 0.3 else MaxScalar(rng.randrange(-3, 11))
            for _ in range(n)
        ]

    for _ in range(300):
        n = rng.randrange(1, 6)
        u, v = draw_vector(n), draw_vector(n)
        lhs = dot(u, v)
        bound = max(u) * max(v)
        assert lhs <= bound
        argmax_u = {i for i, x in enumerate(u) if x == max(u)}
        argmax_v = {i for i, x in enumerate(v) if x == max(v)}
        assert (lhs == bound) == bool(argmax_u & argmax_v)


def test_ladders_match_brute_force():
    rng = random.Random(42)
    for trial in range(120):
        n = rng.randrange(1, 7)
        a = gen_matrix(n, eps_prob=rng.choice([0.0, 0.2, 0.5]), seed=rng)
        etas = eta_ladder(a)
        deltas = delta_ladder(a)
        assert permanent(a) == permanent_bf(a)
        for k in range(n + 1):
            assert etas[k] == eta_bf(a, k), f"eta_{k} mismatch on\n{a}"
            assert deltas[k] == delta_bf(a, k), f"delta_{k} mismatch on\n{a}"


def test_ladders_with_fractions():
    a = MaxMatrix([["1/2", "1/3"], ["1/5", "-7/4"]])
    assert permanent(a) == permanent_bf(a) == MaxScalar(Fraction(8, 15))
    assert eta(a, 1) == MaxScalar(Fraction(1, 2))


def test_permutations():
    p = Permutation([1, 2, 0, 3])
    assert p(0) == 1
    assert p.inverse()(1) == 0
    assert str(p) == "(2 3 1 4)"
    assert WORKED_B.permute_rows(p) == p.matrix() @ WORKED_B
    assert WORKED_B.permute_cols(p) == WORKED_B @ p.matrix()
    assert P0B == WORKED_B.permute_rows(p)
    assert list(Permutation.all(2)) == [Permutation([0, 1]), Permutation([1, 0])]
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])


def test_parse_and_format_round_trip():
    text = format_matrix(WORKED_B)
    assert parse_matrix(text) == WORKED_B
    grid = str(WORKED_B)
    assert parse_matrix(grid) == WORKED_B
    assert parse_matrix("2 -inf\n-inf 0") == MaxMatrix([[2, "-inf"], ["-inf", 0]])
    with pytest.raises(ParseError):
        parse_matrix("")
    with pytest.raises(ParseError):
        parse_matrix('{"rows": 2}')
    with pytest.raises(ParseError):
        parse_matrix('{"rows": 2, "cols": 2, "data": [["0"]]}')
    with pytest.raises(ParseError):
        parse_matrix("1 x\n2 3")
