"""Brute-force reference implementations and structured random generators.

Everything here is deliberately definitional: permanents and minors by
enumeration over permutations and index subsets, roots by testing every
candidate crossing against the induced function.  These are the gold
standards that the fast paths (matching-based permanent/eta, hull-based
roots) are checked against; they never share code with them.

The generators draw from a small rational pool (default -3..10, plus eps
with some probability) so that coefficient ties, the interesting edge cases
for concavity and partitions, occur frequently.  Every generator is a pure
function of its seed.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Optional, Sequence

from .errors import CapExceededError
from .matrix import MaxMatrix
from .poly import Maxpolynomial, RootList
from .scalar import EPS, MaxScalar, as_scalar

BF_CAP = 8

DEFAULT_POOL: tuple[int, ...] = tuple(range(-3, 11))


def _check_bf_cap(n: int) -> None:
    if n > BF_CAP:
        raise CapExceededError(f"brute-force enumeration needs n <= {BF_CAP}, got {n}")


def permanent_bf(a: MaxMatrix) -> MaxScalar:
    """perm(A) by direct enumeration of all n! permutations."""
    a._check_square()
    _check_bf_cap(a.rows)
    raw = a.raw()
    best: Fraction | None = None
    for sigma in itertools.permutations(range(a.rows)):
        total = Fraction(0)
        for i, j in enumerate(sigma):
            v = raw[i][j]
            if v is None:
                break
            total += v
        else:
            if best is None or total > best:
                best = total
    return EPS if best is None else MaxScalar(best)


def eta_bf(a: MaxMatrix, k: int) -> MaxScalar:
    """eta_k(A) by enumerating all k x k submatrices."""
    a._check_square()
    _check_bf_cap(a.rows)
    n = a.rows
    if not 0 <= k <= n:
        raise ValueError(f"minor order {k} out of range 0..{n}")
    if k == 0:
        return MaxScalar(0)
    best = EPS
    for rows in itertools.combinations(range(n), k):
        for cols in itertools.combinations(range(n), k):
            best = best + permanent_bf(a.submatrix(rows, cols))
    return best


def delta_bf(a: MaxMatrix, k: int) -> MaxScalar:
    """delta_k(A) by enumerating all principal k x k submatrices."""
    a._check_square()
    _check_bf_cap(a.rows)
    n = a.rows
    if not 0 <= k <= n:
        raise ValueError(f"minor order {k} out of range 0..{n}")
    if k == 0:
        return MaxScalar(0)
    best = EPS
    for rows in itertools.combinations(range(n), k):
        best = best + permanent_bf(a.submatrix(rows, rows))
    return best


def roots_bf(p: Maxpolynomial) -> RootList:
    """Tropical roots straight from the definition, without hulls.

    Candidates are the crossings (a_i - a_j) / (j - i) of pairs of finite
    monomials; a candidate r is a root when the maximum of p^(r) is attained
    by at least two monomials, and its multiplicity is the largest |i - j|
    over attaining pairs.  The initial eps run of length l adds l eps roots.
    """
    if p.is_null:
        raise ValueError("the null polynomial has no roots")
    finite = [(i, c.value) for i, c in enumerate(p.coeffs) if not c.is_eps]
    candidates = set()
    for (i, ai), (j, aj) in itertools.combinations(finite, 2):
        candidates.add(Fraction(ai - aj, j - i))
    out: list[MaxScalar] = []
    for r in sorted(candidates, reverse=True):
        top = max(a + i * r for i, a in finite)
        attaining = [i for i, a in finite if a + i * r == top]
        if len(attaining) >= 2:
            out.extend([MaxScalar(r)] * (max(attaining) - min(attaining)))
    run = 0
    while p.coeffs[run].is_eps:
        run += 1
    out.extend([EPS] * run)
    return tuple(out)


# ----------------------------------------------------------------------
# seeded generators


def _rng(seed: int | random.Random) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def _draw(rng: random.Random, pool: Sequence[object], eps_prob: float) -> MaxScalar:
    if rng.random() < eps_prob:
        return EPS
    return as_scalar(rng.choice(pool))


def gen_matrix(
    n: int,
    entry_pool: Optional[Sequence[object]] = None,
    eps_prob: float = 0.2,
    seed: int | random.Random = 0,
) -> MaxMatrix:
    """A random n x n matrix with entries from the pool, eps with eps_prob."""
    rng = _rng(seed)
    pool = list(DEFAULT_POOL if entry_pool is None else entry_pool)
    return MaxMatrix(
        [[_draw(rng, pool, eps_prob) for _ in range(n)] for _ in range(n)]
    )


def gen_poly(
    max_degree: int,
    entry_pool: Optional[Sequence[object]] = None,
    eps_prob: float = 0.25,
    seed: int | random.Random = 0,
) -> Maxpolynomial:
    """A random nonnull maxpolynomial of degree <= max_degree.

    eps coefficients (including initial eps runs) appear with eps_prob; the
    leading coefficient is always finite.
    """
    rng = _rng(seed)
    pool = list(DEFAULT_POOL if entry_pool is None else entry_pool)
    degree = rng.randrange(max_degree + 1)
    coeffs = [_draw(rng, pool, eps_prob) for _ in range(degree)]
    coeffs.append(as_scalar(rng.choice(pool)))
    return Maxpolynomial(coeffs)


def gen_pd_matrix(n: int, seed: int | random.Random = 0) -> MaxMatrix:
    """A random diagonally dominant (hence principally dominant) matrix.

    Every diagonal entry is the maximum of its row, which forces every
    maximal minor onto a principal submatrix.
    """
    rng = _rng(seed)
    pool = list(DEFAULT_POOL)
    rows = []
    for i in range(n):
        row = [_draw(rng, pool, 0.2) for _ in range(n)]
        row[i] = max([as_scalar(rng.choice(pool))] + row)
        rows.append(row)
    return MaxMatrix(rows)


def gen_shared_pair(n: int, seed: int | random.Random = 0) -> tuple[MaxMatrix, MaxMatrix]:
    """A pair (A, B) such that A^T and B share a max-column partition.

    The construction plants the shared structure: a random set partition of
    the rank positions is realised as the argmax pattern of both the row
    maxima of A and the column maxima of B, with all other entries kept at
    or below the planted maxima (ties allowed, eps allowed).
    """
    rng = _rng(seed)
    pool = list(DEFAULT_POOL)

    rvals = sorted(rng.choice(pool) for _ in range(n))  # row maxima of A, ascending
    svals = sorted(rng.choice(pool) for _ in range(n))  # column maxima of B

    labels: list[int] = []
    for _ in range(n):  # random restricted-growth string = random set partition
        labels.append(rng.randrange((max(labels) + 2) if labels else 1))
    nblocks = max(labels) + 1
    block_col = rng.sample(range(n), nblocks)  # block -> argmax column in A
    block_row = rng.sample(range(n), nblocks)  # block -> argmax row in B
    rho = rng.sample(range(n), n)  # position -> row of A
    col_of = rng.sample(range(n), n)  # position -> column of B

    def below(v: int) -> MaxScalar:
        if rng.random() < 0.25:
            return EPS
        options = [w for w in pool if w <= v]
        return as_scalar(rng.choice(options))

    a_rows = [[EPS] * n for _ in range(n)]
    b_rows = [[EPS] * n for _ in range(n)]
    for t in range(n):
        i, v = rho[t], rvals[t]
        a_rows[i] = [below(v) for _ in range(n)]
        a_rows[i][block_col[labels[t]]] = as_scalar(v)
    for t in range(n):
        j, v = col_of[t], svals[t]
        for i in range(n):
            b_rows[i][j] = below(v)
        b_rows[block_row[labels[t]]][j] = as_scalar(v)
    return MaxMatrix(a_rows), MaxMatrix(b_rows)
