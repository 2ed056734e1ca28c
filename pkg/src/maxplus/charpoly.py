"""Characteristic maxpolynomials, Gram machinery and max-column partitions.

Three degree-n maxpolynomials are attached to a square matrix A:

  * char_poly(A) = perm(x I (+) A): coefficient of x^{n-k} is delta_k(A),
    the maximal principal minor of order k;
  * full_char_poly(A) = perm(x 0 (+) A), with x in every entry: coefficient
    of x^{n-k} is eta_k(A), the maximal minor of order k.  The eta ladder is
    concave, so the full characteristic maxpolynomial is always in full
    canonical form, while char_poly need not be;
  * gram_char_poly(A) = char_poly of the Hadamard root of the Gram matrix
    A^T A: the full-canonical-form polynomial whose roots are the column
    maxima of A.

A matrix is principally dominant when delta_k = eta_k for every k,
equivalently when its two characteristic maxpolynomials coincide.

A max-column partition of M groups the sorted column ranks 1..n by the row
position of each column's maximal entry: sort the column maxima ascending by
value (witnessed by a permutation sigma and one chosen argmax row per
column), then rank positions j and k share a block exactly when the chosen
rows coincide.  Ties, both in argmax position and in sorted value, make the
partition non-unique; the enumeration below walks every consistent choice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .matrix import DELTA_CAP, MaxMatrix, delta_ladder, eta_ladder
from .poly import Maxpolynomial
from .scalar import ONE, MaxScalar


def char_poly(a: MaxMatrix, cap: int = DELTA_CAP) -> Maxpolynomial:
    """perm(x I (+) A): x^{n-k} coefficient delta_k(A), leading coefficient 0."""
    ladder = delta_ladder(a, cap=cap)
    return Maxpolynomial(reversed(ladder))


def full_char_poly(a: MaxMatrix) -> Maxpolynomial:
    """perm(x 0 (+) A): x^{n-k} coefficient eta_k(A); always in FCF."""
    return Maxpolynomial(reversed(eta_ladder(a)))


def nu(a: MaxMatrix, cap: int = DELTA_CAP) -> MaxScalar:
    """The largest max-plus eigenvalue: the largest root of char_poly(A)."""
    a._check_square()
    return char_poly(a, cap=cap).roots()[0]


def gram(a: MaxMatrix) -> MaxMatrix:
    """The Gram matrix A^T A; entry (i, j) is <column i, column j>."""
    return a.T @ a


def hat(a: MaxMatrix) -> MaxMatrix:
    """The Hadamard root of the Gram matrix, (A^T A)^(1/2)."""
    return gram(a).hpow("1/2")


def column_maxima(a: MaxMatrix) -> list[MaxScalar]:
    return [max(a.col(j)) for j in range(a.cols)]


def row_maxima(a: MaxMatrix) -> list[MaxScalar]:
    return [max(a.row(i)) for i in range(a.rows)]


def gram_char_poly(a: MaxMatrix) -> Maxpolynomial:
    """The FCF maxpolynomial whose roots are the column maxima of A.

    Only the diagonal of hat(A) survives the permanent, so this equals
    char_poly(hat(A)) while avoiding the minor enumeration.
    """
    return Maxpolynomial.from_roots(ONE, column_maxima(a))


def gram_permanent(a: MaxMatrix) -> MaxScalar:
    """perm(A^T A): the diagonal product, twice the sum of all column maxima."""
    out = ONE
    for j in range(a.cols):
        out = out * max(a.col(j)).scaled(2)
    return out


def principal_dominance_failure(a: MaxMatrix, cap: int = DELTA_CAP) -> Optional[int]:
    """The smallest order k with delta_k(A) < eta_k(A), or None if dominant."""
    deltas = delta_ladder(a, cap=cap)
    etas = eta_ladder(a)
    for k in range(1, a.rows + 1):
        if deltas[k] != etas[k]:
            return k
    return None


def is_principally_dominant(a: MaxMatrix, cap: int = DELTA_CAP) -> bool:
    """Whether every maximal minor is attained on a principal submatrix."""
    return principal_dominance_failure(a, cap=cap) is None


# ----------------------------------------------------------------------
# max-column partitions


@dataclass(frozen=True)
class ColumnPartition:
    """A max-column partition with its argmax witness.

    ``blocks`` partitions the 0-based rank positions {0..n-1}; identity and
    hashing use the blocks only.  The witness records the ascending column
    order ``sigma`` (position -> column) and the chosen argmax row per
    column, which downstream constructions need for building orienting
    permutations.
    """

    blocks: frozenset[frozenset[int]]
    sigma: tuple[int, ...] = field(compare=False)
    argmax_rows: tuple[int, ...] = field(compare=False)

    def format(self) -> str:
        """1-based text form, e.g. ``{1,3},{2,4}``; blocks sorted by minimum."""
        blocks = sorted(sorted(b) for b in self.blocks)
        return ",".join("{" + ",".join(str(i + 1) for i in b) + "}" for b in blocks)

    def __str__(self) -> str:
        return self.format()


def _blocks_of(rows_at_positions: tuple[int, ...]) -> frozenset[frozenset[int]]:
    groups: dict[int, list[int]] = {}
    for pos, row in enumerate(rows_at_positions):
        groups.setdefault(row, []).append(pos)
    return frozenset(frozenset(g) for g in groups.values())


def _ascending_orders(values: list[MaxScalar], budget: int) -> Iterator[tuple[int, ...]]:
    """Every permutation of columns that sorts the values ascending.

    Value ties make the order non-unique; tie groups are permuted
    independently.  Stops silently once the budget is exhausted (the caller
    tracks truncation).
    """
    order = sorted(range(len(values)), key=lambda j: (values[j], j))
    groups: list[list[int]] = []
    for j in order:
        if groups and values[groups[-1][0]] == values[j]:
            groups[-1].append(j)
        else:
            groups.append([j])
    count = 0
    for arranged in itertools.product(*(itertools.permutations(g) for g in groups)):
        if count >= budget:
            return
        count += 1
        yield tuple(itertools.chain.from_iterable(arranged))


def max_column_partitions(
    m: MaxMatrix, cap: int = 64, witness_budget: int = 100_000
) -> tuple[list[ColumnPartition], bool]:
    """All distinct max-column partitions of M, with one witness each.

    Enumerates every argmax-row choice for tied column maxima and every
    ascending sort order for tied values, deduplicates by block structure,
    and returns at most ``cap`` partitions together with a flag telling
    whether the enumeration was truncated (by the cap or by the raw witness
    budget).
    """
    if cap < 1:
        raise ValueError("partition cap must be at least 1")
    n = m.cols
    col_max = [max(m.col(j)) for j in range(n)]
    argmax_sets = [
        [i for i in range(m.rows) if m[i, j] == col_max[j]] for j in range(n)
    ]

    seen: dict[frozenset[frozenset[int]], ColumnPartition] = {}
    truncated = False
    spent = 0
    for sigma in _ascending_orders(col_max, witness_budget):
        for choice in itertools.product(*argmax_sets):
            spent += 1
            if spent > witness_budget:
                truncated = True
                break
            blocks = _blocks_of(tuple(choice[sigma[t]] for t in range(n)))
            if blocks not in seen:
                if len(seen) >= cap:
                    truncated = True
                    break
                seen[blocks] = ColumnPartition(blocks, sigma, tuple(choice))
        if truncated:
            break
    ordered = sorted(seen.values(), key=lambda p: p.format())
    return ordered, truncated


@dataclass(frozen=True)
class SharedPartition:
    """A max-column partition common to A^T and B, with both witnesses."""

    blocks: frozenset[frozenset[int]]
    a_witness: ColumnPartition  # witness on A^T (columns of A^T = rows of A)
    b_witness: ColumnPartition  # witness on B

    def format(self) -> str:
        return self.a_witness.format()


def shared_partition(
    a: MaxMatrix, b: MaxMatrix, cap: int = 64, witness_budget: int = 100_000
) -> Optional[SharedPartition]:
    """A common element of the partition lists of A^T and B, or None.

    Both matrices must be square and of equal order.  When several
    partitions are shared the lexicographically smallest text form wins,
    so the result is deterministic.
    """
    a._check_square()
    b._check_square()
    if a.rows != b.rows:
        raise ValueError("shared partitions need matrices of equal order")
    parts_a, _ = max_column_partitions(a.T, cap=cap, witness_budget=witness_budget)
    parts_b, _ = max_column_partitions(b, cap=cap, witness_budget=witness_budget)
    by_blocks = {p.blocks: p for p in parts_b}
    for pa in parts_a:  # parts_a is sorted by format already
        pb = by_blocks.get(pa.blocks)
        if pb is not None:
            return SharedPartition(pa.blocks, pa, pb)
    return None
