"""Matrix-side enumerations for the convolution identities.

Each identity equates a polynomial-side convolution with a finite maximum of
characteristic maxpolynomials over permuted matrix combinations (permutation
matrices are the max-plus orthogonal matrices):

  * additive:        (p #n q) = max over P, Q of full_char_poly(A (+) P B Q)
                     for p, q the full characteristic maxpolynomials;
  * principally dominant: (p #n q) = max over P of char_poly(A (+) P B P^T)
                     for principally dominant A, B and their plain
                     characteristic maxpolynomials;
  * max-row:         (p #n q) = max over P of the Gram characteristic
                     maxpolynomial of (A (+) P B)^T;
  * Hadamard:        (p o q) = max over P, Q of full_char_poly(A o P B Q);
  * multiplicative:  (p o q) = max over P of full_char_poly(A P B)
                     = max over P, Q of char_poly(A P B Q), for A^T and B
                     sharing a max-column partition, p and q their Gram
                     characteristic maxpolynomials.

The functions here compute the right-hand sides by explicit enumeration (the
left-hand sides belong to the polynomial module); equality assertions are
formal coefficient comparisons made by the callers.  Enumerations refuse to
run above their order caps: identity checking is exact or nothing.

With ``certificate=True`` each function also returns, per minor order k, the
first permutation tuple attaining the coefficient of x^{n-k}.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Optional, Sequence

from .assignment import matching_ladder
from .charpoly import (
    char_poly,
    full_char_poly,
    gram_char_poly,
    max_column_partitions,
    principal_dominance_failure,
    row_maxima,
    shared_partition,
)
from .errors import CapExceededError
from .matrix import MaxMatrix, Permutation
from .poly import Maxpolynomial
from .scalar import EPS, MaxScalar

#: Order caps: (n!)^2 loops and n! loops respectively.
PAIR_CAP = 5
SINGLE_CAP = 6

Certificate = dict[int, Optional[tuple[Permutation, ...]]]


def _check_orders(a: MaxMatrix, b: MaxMatrix) -> int:
    a._check_square()
    b._check_square()
    if a.rows != b.rows:
        raise ValueError(f"matrices must have equal order, got {a.rows} and {b.rows}")
    return a.rows


def _check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapExceededError(f"{what} enumeration needs order <= {cap}, got {n}")


def _poly_from_best(n: int, best: list[Fraction | None]) -> Maxpolynomial:
    # best[k] is the coefficient of x^{n-k}
    return Maxpolynomial(
        EPS if best[n - i] is None else MaxScalar(best[n - i]) for i in range(n + 1)
    )


def _pairwise_enumeration(a, b, combine, cap, what, certificate):
    """max over (P, Q) of the full char poly of combine(A, P B Q)."""
    n = _check_orders(a, b)
    _check_cap(n, cap, what)
    ra, rb = a.raw(), b.raw()
    best: list[Fraction | None] = [None] * (n + 1)
    cert: Certificate = {k: None for k in range(n + 1)}
    order = range(n)
    for pi in itertools.permutations(order):
        brows = [rb[p] for p in pi]
        for gamma in itertools.permutations(order):
            grid = [
                [combine(ra[i][j], brows[i][gamma[j]]) for j in range(n)]
                for i in order
            ]
            ladder = matching_ladder(grid)
            for k in range(n + 1):
                w = ladder[k]
                if w is not None and (best[k] is None or w > best[k]):
                    best[k] = w
                    if certificate:
                        cert[k] = (Permutation(pi), Permutation(gamma).inverse())
    poly = _poly_from_best(n, best)
    return (poly, cert) if certificate else poly


def additive_conv_rhs(
    a: MaxMatrix, b: MaxMatrix, cap: int = PAIR_CAP, certificate: bool = False
):
    """max over all (P, Q) of full_char_poly(A (+) P B Q).

    Formally equals the order-n max convolution of the two full
    characteristic maxpolynomials; coefficientwise,
    d_{n-k} = max_l (eta_l(A) + eta_{k-l}(B)).
    """

    def combine(x, y):
        if x is None:
            return y
        if y is None:
            return x
        return x if x >= y else y

    return _pairwise_enumeration(a, b, combine, cap, "additive (n!)^2", certificate)


def hadamard_conv_rhs(
    a: MaxMatrix, b: MaxMatrix, cap: int = PAIR_CAP, certificate: bool = False
):
    """max over all (P, Q) of full_char_poly(A o P B Q).

    Formally equals the Hadamard product of the two full characteristic
    maxpolynomials; the ordered root vector is the entrywise sum of the two
    ordered root vectors.
    """

    def combine(x, y):
        if x is None or y is None:
            return None
        return x + y

    return _pairwise_enumeration(a, b, combine, cap, "Hadamard (n!)^2", certificate)


def additive_conv_multi(matrices: Sequence[MaxMatrix]) -> Maxpolynomial:
    """Iterated order-n max convolution of the full characteristic polys.

    Equals the maximum of perm(x 0 (+) A_0 (+) P_1 A_1 Q_1 (+) ...) over all
    permutation tuples; its roots are the n maximal roots over all inputs.
    """
    if not matrices:
        raise ValueError("at least one matrix is required")
    for m in matrices:
        m._check_square()
    n = matrices[0].rows
    if any(m.rows != n for m in matrices):
        raise ValueError("all matrices must have equal order")
    acc = full_char_poly(matrices[0])
    for m in matrices[1:]:
        acc = acc.max_convolve(full_char_poly(m), n)
    return acc


def pd_conv_rhs(
    a: MaxMatrix, b: MaxMatrix, cap: int = SINGLE_CAP, certificate: bool = False
):
    """max over P of char_poly(A (+) P B P^T) for principally dominant A, B.

    Rejects inputs that are not principally dominant: on such inputs the n!
    conjugation set is not guaranteed to reproduce the convolution.
    Coefficientwise, d_{n-k} = max_l (delta_l(A) + delta_{k-l}(B)).
    """
    n = _check_orders(a, b)
    _check_cap(n, cap, "principally dominant n!")
    for name, m in (("first", a), ("second", b)):
        k = principal_dominance_failure(m)
        if k is not None:
            raise ValueError(
                f"{name} matrix is not principally dominant: "
                f"delta_{k} < eta_{k} at order k = {k}"
            )
    poly, cert = _pd_enumeration(a, b)
    return (poly, cert) if certificate else poly


def _pd_enumeration(a: MaxMatrix, b: MaxMatrix):
    """max over P of char_poly(A (+) P B P^T), with no dominance check.

    The unchecked enumeration is what negative controls exercise.
    """
    n = _check_orders(a, b)
    ra, rb = a.raw(), b.raw()
    best: list[Fraction | None] = [None] * (n + 1)
    cert: Certificate = {k: None for k in range(n + 1)}
    for pi in itertools.permutations(range(n)):
        grid = []
        for i in range(n):
            bi = rb[pi[i]]
            grid.append(
                [
                    _max_or_none(ra[i][j], bi[pi[j]])
                    for j in range(n)
                ]
            )
        ladder = _delta_ladder_raw(grid)
        for k in range(n + 1):
            w = ladder[k]
            if w is not None and (best[k] is None or w > best[k]):
                best[k] = w
                cert[k] = (Permutation(pi),)
    return _poly_from_best(n, best), cert


def _max_or_none(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return x if x >= y else y


def _delta_ladder_raw(grid) -> list[Fraction | None]:
    n = len(grid)
    best: list[Fraction | None] = [None] * (n + 1)
    best[0] = Fraction(0)
    for k in range(1, n + 1):
        for subset in itertools.combinations(range(n), k):
            sub = [[grid[i][j] for j in subset] for i in subset]
            w = matching_ladder(sub)[k]
            if w is not None and (best[k] is None or w > best[k]):
                best[k] = w
    return best


def max_row_conv(
    a: MaxMatrix, b: MaxMatrix, cap: int = SINGLE_CAP, certificate: bool = False
):
    """max over P of the Gram characteristic maxpolynomial of (A (+) P B)^T.

    Equals the order-n max convolution of the Gram characteristic
    maxpolynomials of A^T and B^T; the roots are the n maximal values among
    the row maxima of A and of B.
    """
    n = _check_orders(a, b)
    _check_cap(n, cap, "max-row n!")
    ma = row_maxima(a)
    mb = row_maxima(b)
    best: list[MaxScalar | None] = [None] * (n + 1)
    cert: Certificate = {k: None for k in range(n + 1)}
    for pi in itertools.permutations(range(n)):
        term = Maxpolynomial.from_roots(
            MaxScalar(0), [ma[i] + mb[pi[i]] for i in range(n)]
        )
        for i, c in enumerate(term.coeffs):
            k = n - i
            if best[k] is None or c > best[k]:
                best[k] = c
                cert[k] = (Permutation(pi),)
    poly = Maxpolynomial(
        EPS if best[n - i] is None else best[n - i] for i in range(n + 1)
    )
    return (poly, cert) if certificate else poly


def mult_conv_rhs(
    a: MaxMatrix, b: MaxMatrix, cap: int = SINGLE_CAP, certificate: bool = False
):
    """max over P of full_char_poly(A P B), for A^T and B sharing a
    max-column partition.

    Equals the Hadamard product of the Gram characteristic maxpolynomials of
    A^T and B; the ordered roots are the entrywise sums of the ordered
    roots.  Rejects pairs with no shared partition.
    """
    n = _check_orders(a, b)
    _check_cap(n, cap, "multiplicative n!")
    _require_shared(a, b)
    ra, rb = a.raw(), b.raw()
    best: list[Fraction | None] = [None] * (n + 1)
    cert: Certificate = {k: None for k in range(n + 1)}
    for pi in itertools.permutations(range(n)):
        brows = [rb[p] for p in pi]
        grid = _raw_matmul(ra, brows)
        ladder = matching_ladder(grid)
        for k in range(n + 1):
            w = ladder[k]
            if w is not None and (best[k] is None or w > best[k]):
                best[k] = w
                cert[k] = (Permutation(pi),)
    poly = _poly_from_best(n, best)
    return (poly, cert) if certificate else poly


def _require_shared(a: MaxMatrix, b: MaxMatrix):
    sp = shared_partition(a, b)
    if sp is None:
        parts_a, _ = max_column_partitions(a.T)
        parts_b, _ = max_column_partitions(b)
        raise ValueError(
            "the transpose of the first matrix and the second matrix share no "
            f"max-column partition: [{'; '.join(p.format() for p in parts_a)}] "
            f"vs [{'; '.join(p.format() for p in parts_b)}]"
        )
    return sp


def _raw_matmul(ra, rb):
    cols = list(zip(*rb))
    out = []
    for arow in ra:
        row = []
        for bcol in cols:
            bestv = None
            for x, y in zip(arow, bcol):
                if x is None or y is None:
                    continue
                v = x + y
                if bestv is None or v > bestv:
                    bestv = v
            row.append(bestv)
        out.append(row)
    return out


def orienting_permutations(
    a: MaxMatrix, b: MaxMatrix, cap: int = SINGLE_CAP
) -> tuple[Permutation, Permutation]:
    """Permutations (P0, Q0) realising the multiplicative identity exactly:

        full_char_poly(A P0 B) = char_poly(A P0 B Q0)
                               = gram_char_poly(A^T) o gram_char_poly(B).

    P0 is built from the shared-partition witnesses: when the i-th smallest
    row maximum of A sits in column k_i, the i-th smallest column maximum of
    B is moved into row k_i of P0 B.  The n decoupled maxima of A P0 B then
    occupy distinct rows and columns, and Q0 moves them onto the diagonal.
    """
    n = _check_orders(a, b)
    _check_cap(n, cap, "orienting n!")
    sp = _require_shared(a, b)
    aw, bw = sp.a_witness, sp.b_witness

    pi0 = [-1] * n
    used = [False] * n
    for t in range(n):
        k_t = aw.argmax_rows[aw.sigma[t]]  # column of A holding the t-th row max
        w_t = bw.argmax_rows[bw.sigma[t]]  # row of B holding the t-th column max
        if pi0[k_t] == -1:
            pi0[k_t] = w_t
            used[w_t] = True
        elif pi0[k_t] != w_t:
            raise RuntimeError("inconsistent shared-partition witnesses")
    spare = iter(w for w in range(n) if not used[w])
    for k in range(n):
        if pi0[k] == -1:
            pi0[k] = next(spare)
    p0 = Permutation(pi0)

    tau = [-1] * n
    for t in range(n):
        tau[bw.sigma[t]] = aw.sigma[t]  # move column c_t onto row rho_t's diagonal
    q0 = Permutation(tau)

    product = a @ b.permute_rows(p0)
    target = gram_char_poly(a.T).hadamard(gram_char_poly(b))
    if full_char_poly(product) != target or char_poly(product.permute_cols(q0)) != target:
        raise RuntimeError("orienting permutations failed verification")
    return p0, q0
