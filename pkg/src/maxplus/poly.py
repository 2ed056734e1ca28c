"""Formal maxpolynomials over the max-plus semiring.

A maxpolynomial p(x) = (+)_k a_k x^k is stored as its ascending coefficient
tuple (a_0, ..., a_n) of MaxScalar.  It induces the convex piecewise-affine
function p^(x) = max_k (a_k + k*x).  Coefficient tuples are normalized on
construction: trailing eps coefficients are trimmed, so a_n != eps unless the
polynomial is the null polynomial (the single coefficient eps), whose degree
is -inf.

Equality of Maxpolynomial values is formal (coefficientwise).  Two formally
distinct maxpolynomials may induce the same function; ``functionally_equals``
and ``concavify`` (the unique full-canonical-form representative of the
function class) deal with that separately.

Tropical roots are the points where p^ is non-differentiable, with
multiplicity equal to the slope change; eps counts as a root with
multiplicity l when a_0 = ... = a_{l-1} = eps.  Roots are computed exactly
from the upper concave hull (Newton polygon) of the finite coefficient
points (i, a_i).

The text format is the comma-separated ascending coefficient list using the
scalar token grammar, e.g. ``8, 7, 5, 3, 0`` for x^4 (+) 3x^3 (+) 5x^2
(+) 7x (+) 8.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ParseError
from .scalar import EPS, ONE, MaxScalar, as_scalar, format_scalar, parse_scalar

#: A multiset of tropical roots in non-increasing order (eps entries last).
RootList = tuple[MaxScalar, ...]

NEG_INF_DEGREE = float("-inf")


class Maxpolynomial:
    """A formal maxpolynomial; immutable, with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[object]):
        cs = [as_scalar(c) for c in coeffs]
        if not cs:
            raise ValueError("a maxpolynomial needs at least one coefficient")
        while len(cs) > 1 and cs[-1].is_eps:
            cs.pop()
        if len(cs) == 1 and cs[0].is_eps:
            cs = [EPS]
        self._coeffs = tuple(cs)

    @classmethod
    def null(cls) -> "Maxpolynomial":
        """The null polynomial eps x^0, of degree -inf."""
        return cls([EPS])

    @classmethod
    def constant(cls, a: object) -> "Maxpolynomial":
        return cls([a])

    @classmethod
    def from_roots(cls, lead: object, roots: Iterable[object]) -> "Maxpolynomial":
        """Expand lead (.) (x (+) r_1) ... (x (+) r_n) formally.

        The result is in full canonical form and its roots are exactly the
        given multiset: with the roots sorted t_1 >= ... >= t_n, coefficient
        a_k is lead (.) t_1 (.) ... (.) t_{n-k}.
        """
        lead = as_scalar(lead)
        if lead.is_eps:
            raise ValueError("leading coefficient of a factored form cannot be -inf")
        rs = sorted((as_scalar(r) for r in roots), reverse=True)
        coeffs = [lead]
        acc = lead
        for r in rs:
            acc = acc * r
            coeffs.append(acc)
        coeffs.reverse()
        return cls(coeffs)

    @property
    def coeffs(self) -> tuple[MaxScalar, ...]:
        return self._coeffs

    @property
    def is_null(self) -> bool:
        return self._coeffs[0].is_eps and len(self._coeffs) == 1

    @property
    def degree(self) -> int | float:
        """The degree: len - 1 for a nonnull polynomial, -inf for null."""
        if self.is_null:
            return NEG_INF_DEGREE
        return len(self._coeffs) - 1

    def coeff(self, k: int) -> MaxScalar:
        """Coefficient of x^k (eps beyond the stored degree)."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return EPS

    # ------------------------------------------------------------------
    # semiring operations

    def __add__(self, other: "Maxpolynomial") -> "Maxpolynomial":
        """Coefficientwise (+)."""
        n = max(len(self._coeffs), len(other._coeffs))
        return Maxpolynomial(self.coeff(k) + other.coeff(k) for k in range(n))

    def __mul__(self, other: "Maxpolynomial") -> "Maxpolynomial":
        """Max-plus convolution of coefficient vectors; the null annihilates."""
        if self.is_null or other.is_null:
            return Maxpolynomial.null()
        a, b = self._coeffs, other._coeffs
        out = [EPS] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai.is_eps:
                continue
            for j, bj in enumerate(b):
                term = ai * bj
                if out[i + j] < term:
                    out[i + j] = term
        return Maxpolynomial(out)

    def derivative(self, k: int = 1) -> "Maxpolynomial":
        """The k-fold max-linear shift: coefficient i of the result is a_{i+k}."""
        if k < 0:
            raise ValueError("derivative order must be nonnegative")
        if k >= len(self._coeffs):
            return Maxpolynomial.null()
        return Maxpolynomial(self._coeffs[k:])

    def max_convolve(self, other: "Maxpolynomial", k: int) -> "Maxpolynomial":
        """The order-k max convolution (self * other)^(k)."""
        return (self * other).derivative(k)

    def hadamard(self, other: "Maxpolynomial") -> "Maxpolynomial":
        """Coefficientwise (.); defined for equal degrees only."""
        if self.degree != other.degree:
            raise ValueError(
                f"Hadamard product needs equal degrees, got {self.degree} and {other.degree}"
            )
        return Maxpolynomial(a * b for a, b in zip(self._coeffs, other._coeffs))

    def evaluate(self, x: MaxScalar) -> MaxScalar:
        """p^(x) = max_k (a_k + k*x), with k*eps = eps for k >= 1."""
        x = as_scalar(x)
        if x.is_eps:
            return self._coeffs[0]
        xv = x.value
        best: Fraction | None = None
        for k, a in enumerate(self._coeffs):
            if a.is_eps:
                continue
            v = a.value + k * xv
            if best is None or v > best:
                best = v
        return EPS if best is None else MaxScalar(best)

    # ------------------------------------------------------------------
    # roots and canonical form

    def _eps_run(self) -> int:
        run = 0
        while run < len(self._coeffs) and self._coeffs[run].is_eps:
            run += 1
        return run

    def _upper_hull(self) -> list[tuple[int, Fraction]]:
        """Upper concave hull vertices of {(i, a_i) : a_i != eps}, x ascending.

        Collinear interior points are dropped, so each hull edge is one
        maximal segment.
        """
        pts = [(i, a.value) for i, a in enumerate(self._coeffs) if not a.is_eps]
        hull: list[tuple[int, Fraction]] = []
        for p in pts:
            while len(hull) > 1:
                (x0, y0), (x1, y1) = hull[-2], hull[-1]
                if (x1 - x0) * (p[1] - y0) - (p[0] - x0) * (y1 - y0) >= 0:
                    hull.pop()
                else:
                    break
            hull.append(p)
        return hull

    def roots(self) -> RootList:
        """All tropical roots with multiplicity, non-increasing, length = degree.

        Finite roots are the negated slopes of the upper concave hull of the
        finite coefficient points: the hull edge from (i, a_i) to (j, a_j)
        contributes the root (a_i - a_j) / (j - i) with multiplicity j - i.
        The initial eps run of length l contributes l eps roots.
        """
        if self.is_null:
            raise ValueError("the null polynomial has no roots")
        hull = self._upper_hull()
        out: list[MaxScalar] = []
        for (i, ai), (j, aj) in zip(hull[::-1], hull[-2::-1]):
            # walking right-to-left, so i > j and the roots come out descending
            out.extend([MaxScalar(Fraction(aj - ai, i - j))] * (i - j))
        out.extend([EPS] * self._eps_run())
        return tuple(out)

    def is_fcf(self) -> bool:
        """Whether the coefficient sequence is concave (full canonical form).

        Concavity means a_{i-1} - a_i <= a_i - a_{i+1} for i = 1..n-1 under
        the convention eps - eps = eps.  Equivalently: the eps coefficients
        form an initial run and the finite part is concave.  Constants and
        monomials are in full canonical form; so is the null polynomial.
        """
        if self.is_null:
            return True
        run = self._eps_run()
        finite = [a.value for a in self._coeffs[run:]]
        if any(v is None for v in finite):
            return False
        return all(
            finite[i - 1] + finite[i + 1] <= 2 * finite[i]
            for i in range(1, len(finite) - 1)
        )

    def concavify(self) -> "Maxpolynomial":
        """The unique full-canonical-form representative of p's function class.

        Coefficients are replaced by their least concave majorant: the upper
        hull value at each index, with indices left of the eps run kept eps.
        Idempotent, and functionally equal to p.
        """
        if self.is_null:
            raise ValueError("the null polynomial cannot be concavified")
        hull = self._upper_hull()
        coeffs: list[MaxScalar] = [EPS] * self._eps_run()
        for (i, ai), (j, aj) in zip(hull, hull[1:]):
            for k in range(i, j):
                coeffs.append(MaxScalar(ai + Fraction(aj - ai, j - i) * (k - i)))
        coeffs.append(MaxScalar(hull[-1][1]))
        return Maxpolynomial(coeffs)

    def functionally_equals(self, other: "Maxpolynomial") -> bool:
        """Whether p^ and q^ agree as functions (equal canonical forms)."""
        if self.is_null or other.is_null:
            raise ValueError("functional comparison needs nonnull polynomials")
        return self.concavify() == other.concavify()

    # ------------------------------------------------------------------
    # value semantics and text forms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Maxpolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    @classmethod
    def parse(cls, text: str) -> "Maxpolynomial":
        """Parse a comma-separated ascending coefficient list."""
        parts = [p.strip() for p in text.strip().split(",")]
        if parts == [""]:
            raise ParseError("empty polynomial text")
        return cls(parse_scalar(p) for p in parts)

    def format_coeffs(self) -> str:
        """Canonical text form: ascending coefficient tokens, comma-separated."""
        return ", ".join(format_scalar(c) for c in self._coeffs)

    def format_monomials(self) -> str:
        """Human form, descending powers, e.g. ``x^2 (+) 2x (+) 20``."""
        if self.is_null:
            return "-inf"
        terms = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            a = self._coeffs[k]
            if a.is_eps:
                continue
            terms.append(_monomial(a, k))
        return " (+) ".join(terms)

    def format_factored(self) -> str:
        """Factored form ``lead (x (+) r_1)...``; only valid when is_fcf()."""
        if not self.is_fcf():
            raise ValueError("only full-canonical-form polynomials factor")
        if self.is_null:
            return "-inf"
        if len(self._coeffs) == 1:
            return format_scalar(self._coeffs[0])
        lead = self._coeffs[-1]
        parts = [] if lead == ONE else [_coeff_token(lead)]
        for r, mult in _run_lengths(self.roots()):
            factor = f"(x (+) {format_scalar(r)})"
            parts.append(factor if mult == 1 else f"{factor}^{mult}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.format_monomials()

    def __repr__(self) -> str:
        return f"Maxpolynomial({self.format_coeffs()!r})"


def _coeff_token(a: MaxScalar) -> str:
    s = format_scalar(a)
    return f"({s})" if (a.value is None or a.value < 0 or a.value.denominator != 1) else s


def _monomial(a: MaxScalar, k: int) -> str:
    power = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
    if k == 0:
        return format_scalar(a)
    if a == ONE:
        return power
    return f"{_coeff_token(a)}{power}"


def _run_lengths(items: Sequence[MaxScalar]) -> list[tuple[MaxScalar, int]]:
    out: list[tuple[MaxScalar, int]] = []
    for x in items:
        if out and out[-1][0] == x:
            out[-1] = (x, out[-1][1] + 1)
        else:
            out.append((x, 1))
    return out


def functionally_leq(p: Maxpolynomial, q: Maxpolynomial) -> bool:
    """Whether p^(x) <= q^(x) pointwise.

    Decided exactly through the canonical forms: the concavified coefficient
    at index i equals inf_x (p^(x) - i*x), so the pointwise order of the
    functions is the coefficientwise order of the concavified forms (padding
    with eps beyond each degree).
    """
    if p.is_null:
        return True
    if q.is_null:
        return False
    cp, cq = p.concavify(), q.concavify()
    n = max(len(cp.coeffs), len(cq.coeffs))
    return all(cp.coeff(k) <= cq.coeff(k) for k in range(n))
