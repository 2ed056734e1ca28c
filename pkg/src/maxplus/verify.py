"""Seeded verification harness for the convolution identities.

Every theorem in scope is an exact finite identity, so verification means:
generate structured random instances from a seed, compute both sides
exactly, and compare formal coefficients.  Zero tolerance; any mismatch is a
counterexample worth printing verbatim.

The harness powers both the ``maxplus verify`` CLI subcommand and the
acceptance test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .charpoly import char_poly, full_char_poly, gram_char_poly, hat, nu, row_maxima
from .convolve import (
    PAIR_CAP,
    SINGLE_CAP,
    _pd_enumeration,
    additive_conv_rhs,
    hadamard_conv_rhs,
    max_row_conv,
    mult_conv_rhs,
    orienting_permutations,
    pd_conv_rhs,
)
from .matrix import MaxMatrix, delta_ladder, eta_ladder, norm
from .oracle import BF_CAP, eta_bf, gen_matrix, gen_pd_matrix, gen_shared_pair
from .poly import Maxpolynomial
from .scalar import MaxScalar


@dataclass
class Report:
    """Outcome of a trial run for one theorem."""

    theorem: str
    n: int
    trials: int
    seed: int
    failures: list[tuple[int, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        ok = self.trials - len(self.failures)
        return f"{ok}/{self.trials} pass"

    def first_counterexample(self) -> Optional[str]:
        if not self.failures:
            return None
        index, description = min(self.failures)
        return f"trial {index}:\n{description}"


def _describe(lines: list[str]) -> str:
    return "\n".join(lines)


def _sides(label_lhs: str, lhs: Maxpolynomial, label_rhs: str, rhs: Maxpolynomial) -> list[str]:
    return [
        f"{label_lhs}: {lhs.format_coeffs()}",
        f"{label_rhs}: {rhs.format_coeffs()}",
    ]


def _matrix_lines(name: str, a: MaxMatrix) -> list[str]:
    return [f"{name}:"] + ["  " + line for line in str(a).splitlines()]


def _top_roots(polys: list[Maxpolynomial], n: int) -> tuple[MaxScalar, ...]:
    pool: list[MaxScalar] = []
    for p in polys:
        pool.extend(p.roots())
    return tuple(sorted(pool, reverse=True)[:n])


def _check_additive(n: int, seed: int, cap: Optional[int]) -> Optional[str]:
    rng = random.Random(seed)
    a = gen_matrix(n, seed=rng)
    b = gen_matrix(n, seed=rng)
    p, q = full_char_poly(a), full_char_poly(b)
    lhs = p.max_convolve(q, n)
    rhs = additive_conv_rhs(a, b, cap=cap or PAIR_CAP)
    problems = []
    if lhs != rhs:
        problems += _sides("convolution", lhs, "matrix maximum", rhs)
    ea, eb = eta_ladder(a), eta_ladder(b)
    formula = Maxpolynomial(
        max(ea[l] * eb[k - l] for l in range(k + 1)) for k in reversed(range(n + 1))
    )
    if formula != lhs:
        problems += _sides("convolution", lhs, "eta coefficient formula", formula)
    if lhs.roots() != _top_roots([p, q], n):
        problems.append(f"roots {lhs.roots()} are not the maximal {n} of the union")
    if problems:
        return _describe(_matrix_lines("A", a) + _matrix_lines("B", b) + problems)
    return None


def _check_pd(n: int, seed: int, cap: Optional[int]) -> Optional[str]:
    rng = random.Random(seed)
    a = gen_pd_matrix(n, seed=rng)
    b = gen_pd_matrix(n, seed=rng)
    lhs = char_poly(a).max_convolve(char_poly(b), n)
    rhs = pd_conv_rhs(a, b, cap=cap or SINGLE_CAP)
    problems = []
    if lhs != rhs:
        problems += _sides("convolution", lhs, "conjugation maximum", rhs)
    da, db = delta_ladder(a), delta_ladder(b)
    formula = Maxpolynomial(
        max(da[l] * db[k - l] for l in range(k + 1)) for k in reversed(range(n + 1))
    )
    if formula != lhs:
        problems += _sides("convolution", lhs, "delta coefficient formula", formula)
    if problems:
        return _describe(_matrix_lines("A", a) + _matrix_lines("B", b) + problems)
    return None


def _check_maxrow(n: int, seed: int, cap: Optional[int]) -> Optional[str]:
    rng = random.Random(seed)
    a = gen_matrix(n, seed=rng)
    b = gen_matrix(n, seed=rng)
    p, q = gram_char_poly(a.T), gram_char_poly(b.T)
    lhs = p.max_convolve(q, n)
    rhs = max_row_conv(a, b, cap=cap or SINGLE_CAP)
    problems = []
    if lhs != rhs:
        problems += _sides("convolution", lhs, "row maximum", rhs)
    expected = tuple(sorted(row_maxima(a) + row_maxima(b), reverse=True)[:n])
    if rhs.roots() != expected:
        problems.append(f"roots {rhs.roots()} are not the top {n} row maxima")
    if problems:
        return _describe(_matrix_lines("A", a) + _matrix_lines("B", b) + problems)
    return None


def _check_hadamard(n: int, seed: int, cap: Optional[int]) -> Optional[str]:
    rng = random.Random(seed)
    a = gen_matrix(n, seed=rng)
    b = gen_matrix(n, seed=rng)
    p, q = full_char_poly(a), full_char_poly(b)
    lhs = p.hadamard(q)
    rhs = hadamard_conv_rhs(a, b, cap=cap or PAIR_CAP)
    problems = []
    if lhs != rhs:
        problems += _sides("Hadamard product", lhs, "matrix maximum", rhs)
    expected = tuple(r * s for r, s in zip(p.roots(), q.roots()))
    if rhs.roots() != expected:
        problems.append(f"roots {rhs.roots()} are not the ordered root sums")
    if problems:
        return _describe(_matrix_lines("A", a) + _matrix_lines("B", b) + problems)
    return None


def _check_mult(n: int, seed: int, cap: Optional[int]) -> Optional[str]:
    a, b = gen_shared_pair(n, seed=seed)
    p, q = gram_char_poly(a.T), gram_char_poly(b)
    lhs = p.hadamard(q)
    rhs = mult_conv_rhs(a, b, cap=cap or SINGLE_CAP)
    problems = []
    if lhs != rhs:
        problems += _sides("Hadamard product", lhs, "product maximum", rhs)
    expected = tuple(r * s for r, s in zip(p.roots(), q.roots()))
    if rhs.roots() != expected:
        problems.append(f"roots {rhs.roots()} are not the ordered root sums")
    try:
        orienting_permutations(a, b, cap=cap or SINGLE_CAP)
    except (RuntimeError, ValueError) as exc:
        problems.append(f"orienting permutations failed: {exc}")
    if problems:
        return _describe(_matrix_lines("A", a) + _matrix_lines("B", b) + problems)
    return None


def _is_concave(ladder: list[MaxScalar]) -> bool:
    """Concavity of a minor ladder under the eps difference conventions.

    Once the ladder hits eps it stays eps (a (k+1)-matching contains a
    k-matching), so comparisons beyond the finite prefix involve eps on both
    sides and are satisfied by convention.
    """
    values = [x.value for x in ladder]
    for k in range(len(values) - 2):
        a, b, c = values[k], values[k + 1], values[k + 2]
        if c is None:
            continue  # the right difference is eps, which never exceeds the left
        if b is None or a is None:
            return False  # finite after eps: not a valid ladder
        if a + c > 2 * b:
            return False
    return True


def _check_fcf_concavity(n: int, seed: int, cap: Optional[int]) -> Optional[str]:
    rng = random.Random(seed)
    a = gen_matrix(n, seed=rng)
    ladder = eta_ladder(a)
    problems = []
    if not _is_concave(ladder):
        problems.append(f"eta ladder {[str(x) for x in ladder]} is not concave")
    if not full_char_poly(a).is_fcf():
        problems.append("full characteristic maxpolynomial is not in FCF")
    if n <= BF_CAP:
        for k in range(n + 1):
            bf = eta_bf(a, k)
            if ladder[k] != bf:
                problems.append(f"eta_{k} = {ladder[k]} but brute force gives {bf}")
    if problems:
        return _describe(_matrix_lines("A", a) + problems)
    return None


def _alternating_product(mats: list[MaxMatrix], transpose_first: bool) -> MaxMatrix:
    out = None
    for idx, m in enumerate(mats):
        factor = m.T if (idx % 2 == 0) == transpose_first else m
        out = factor if out is None else out @ factor
    return out


def _check_inequalities(n: int, seed: int, cap: Optional[int]) -> Optional[str]:
    rng = random.Random(seed)
    mats = [gen_matrix(n, seed=rng) for _ in range(4)]
    a, b = mats[0], mats[1]
    t = rng.choice([2, 3, "1/2", "3/2"])
    problems = []

    def expect(condition: bool, label: str) -> None:
        if not condition:
            problems.append(f"violated: {label}")

    expect(nu(a.hadamard(b)) <= nu(a) * nu(b), "nu(A o B) <= nu(A) nu(B)")
    expect(norm(a.hadamard(b)) <= norm(a) * norm(b), "|A o B| <= |A| |B|")
    expect(nu(a.hpow(t)) == nu(a).scaled(t), "nu(A^t) = t nu(A)")
    expect(norm(a.hpow(t)) == norm(a).scaled(t), "|A^t| = t |A|")
    expect(a.hpow(t) @ b.hpow(t) == (a @ b).hpow(t), "A^t B^t = (AB)^t")
    expect(nu(a @ b) == nu(b @ a), "nu(AB) = nu(BA)")
    expect(norm(a.hadamard(b)) <= nu(a.T @ b), "|A o B| <= nu(A^T B)")
    expect(
        norm(hat(a)) == norm(hat(a.T)) == norm(a) == nu(hat(a)) == nu(hat(a.T)),
        "|hat A| = |hat A^T| = |A| = nu(hat A) = nu(hat A^T)",
    )
    for m in (2, 3, 4):
        chain = mats[:m]
        had = chain[0]
        prod = chain[0]
        hats = hat(chain[0])
        hats_t = hat(chain[0].T)
        for x in chain[1:]:
            had = had.hadamard(x)
            prod = prod @ x
            hats = hats.hadamard(hat(x))
            hats_t = hats_t.hadamard(hat(x.T))
        expect(
            nu(had) <= nu(prod), f"nu(A_1 o .. o A_{m}) <= nu(A_1 .. A_{m})"
        )
        hat_prod = hat(chain[0])
        hat_prod_t = hat(chain[0].T)
        for x in chain[1:]:
            hat_prod = hat_prod @ hat(x)
            hat_prod_t = hat_prod_t @ hat(x.T)
        expect(
            norm(had) <= nu(hats) <= nu(hat_prod),
            f"|o-product| <= nu(o of hats) <= nu(product of hats), m={m}",
        )
        expect(
            norm(had) <= nu(hats_t) <= nu(hat_prod_t),
            f"|o-product| <= nu(o of T-hats) <= nu(product of T-hats), m={m}",
        )
        squared = norm(had).scaled(2)
        if m % 2 == 0:
            first = _alternating_product(chain, transpose_first=True)
            second = _alternating_product(chain, transpose_first=False)
            reversed_second = _alternating_product(
                list(reversed(chain)), transpose_first=False
            )
            expect(
                squared <= nu(first) * nu(second),
                f"even chain bound, m={m}",
            )
            expect(
                nu(second) == nu(reversed_second),
                f"even chain reversal equality, m={m}",
            )
        else:
            first = _alternating_product(chain, transpose_first=False)
            second = _alternating_product([x.T for x in chain], transpose_first=False)
            expect(
                squared <= nu(first @ second),
                f"odd chain bound, m={m}",
            )
    if problems:
        lines = []
        for i, m in enumerate(mats):
            lines += _matrix_lines(f"A_{i + 1}", m)
        return _describe(lines + problems)
    return None


CHECKS: dict[str, Callable[[int, int, Optional[int]], Optional[str]]] = {
    "additive": _check_additive,
    "pd": _check_pd,
    "maxrow": _check_maxrow,
    "hadamard": _check_hadamard,
    "mult": _check_mult,
    "fcf-concavity": _check_fcf_concavity,
    "inequalities": _check_inequalities,
}


def run(
    theorem: str,
    n: int,
    trials: int,
    seed: int = 0,
    cap: Optional[int] = None,
) -> Report:
    """Run seeded trials of one identity; exact comparison, zero tolerance."""
    if theorem not in CHECKS:
        raise ValueError(
            f"unknown theorem {theorem!r}; choose from {', '.join(sorted(CHECKS))}"
        )
    check = CHECKS[theorem]
    master = random.Random(seed)
    report = Report(theorem=theorem, n=n, trials=trials, seed=seed)
    for index in range(trials):
        instance_seed = master.randrange(2**62)
        failure = check(n, instance_seed, cap)
        if failure is not None:
            report.failures.append((index, failure))
    return report


# ----------------------------------------------------------------------
# the fixed symmetric pair used as the principal-dominance negative control

NEGATIVE_CONTROL_A = MaxMatrix([[2, "-inf"], ["-inf", 0]])
NEGATIVE_CONTROL_B = MaxMatrix([[0, 10], [10, 0]])


def negative_control() -> tuple[Maxpolynomial, Maxpolynomial, bool]:
    """Evaluate the pd identity on the fixed symmetric non-dominant pair.

    Returns (conjugation maximum, convolution, violated).  The second matrix
    is not principally dominant, so the theorem does not promise equality
    here; the unchecked enumeration shows what the n! conjugation set
    actually produces.
    """
    a, b = NEGATIVE_CONTROL_A, NEGATIVE_CONTROL_B
    rhs, _ = _pd_enumeration(a, b)
    lhs = char_poly(a).max_convolve(char_poly(b), a.rows)
    return rhs, lhs, rhs != lhs
