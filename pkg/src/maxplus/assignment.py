"""Exact k-cardinality assignment by successive augmenting paths.

Given an m x n weight grid (None marks an absent edge), the ladder function
returns, for every cardinality k, the maximum total weight of a matching
with exactly k edges.  This is the optimisation problem behind max-plus
permanents and maximal minors: the permanent of a square matrix is the
weight of the best perfect matching, and the maximal minor of order k is the
weight of the best k-edge matching.

One augmentation step extends a maximum-weight k-matching to a maximum
weight (k+1)-matching along a maximum-gain augmenting path; the residual
graph of an optimal matching has no positive cycle, so the path search is a
plain Bellman-Ford relaxation.  The successive gains are non-increasing,
which is why the ladder is always a concave sequence.

Weights are exact rationals.  Internally they are rescaled by the common
denominator so that the relaxation loop runs on plain integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

Weight = Fraction | None
Grid = list[list[Weight]]


def matching_ladder(weights: Grid) -> list[Weight]:
    """Maximum matching weight for each cardinality k = 0..min(m, n).

    Entry k of the result is the best total weight over matchings with
    exactly k edges, or None when no such matching exists (every matching of
    that size would use an absent edge).
    """
    m = len(weights)
    n = len(weights[0]) if m else 0
    den = 1
    for row in weights:
        for x in row:
            if x is not None:
                den = lcm(den, x.denominator)
    grid = [[None if x is None else int(x * den) for x in row] for row in weights]

    row_match = [-1] * m
    col_match = [-1] * n
    ladder: list[Weight] = [Fraction(0)]
    total = 0
    for k in range(1, min(m, n) + 1):
        gain = _augment(grid, row_match, col_match)
        if gain is None:
            ladder.extend([None] * (min(m, n) + 1 - k))
            break
        total += gain
        ladder.append(Fraction(total, den))
    return ladder


def _augment(grid: list[list[int | None]], row_match: list[int], col_match: list[int]):
    """Flip a maximum-gain augmenting path into the matching; returns its gain."""
    m, n = len(grid), len(grid[0])
    dist_r: list[int | None] = [0 if row_match[i] == -1 else None for i in range(m)]
    dist_c: list[int | None] = [None] * n
    parent_c = [-1] * n

    for _ in range(m + n + 1):
        changed = False
        for i in range(m):
            di = dist_r[i]
            if di is None:
                continue
            row = grid[i]
            matched = row_match[i]
            for j in range(n):
                w = row[j]
                if w is None or j == matched:
                    continue
                nd = di + w
                if dist_c[j] is None or nd > dist_c[j]:
                    dist_c[j] = nd
                    parent_c[j] = i
                    changed = True
        for j in range(n):
            dj = dist_c[j]
            if dj is None:
                continue
            i = col_match[j]
            if i == -1:
                continue
            nd = dj - grid[i][j]
            if dist_r[i] is None or nd > dist_r[i]:
                dist_r[i] = nd
                changed = True
        if not changed:
            break
    else:
        raise AssertionError("positive residual cycle: matching invariant broken")

    best_j, best = -1, None
    for j in range(n):
        if col_match[j] == -1 and dist_c[j] is not None:
            if best is None or dist_c[j] > best:
                best, best_j = dist_c[j], j
    if best_j == -1:
        return None

    j = best_j
    while True:
        i = parent_c[j]
        previous = row_match[i]  # the unique backward edge into row i
        row_match[i] = j
        col_match[j] = i
        if previous == -1:
            return best
        j = previous
