"""Dense max-plus matrices and their permanent-like functionals.

A MaxMatrix is an immutable rectangular grid of MaxScalar.  Operator
overloads follow the semiring: ``A + B`` is the entrywise maximum and
``A @ B`` the max-plus product C_ij = max_k (a_ik + b_kj).  All-eps rows or
columns are legal.

The permanent is the tropical determinant analogue,

    perm(A) = max over permutations s of a_{1 s(1)} + ... + a_{n s(n)},

an assignment problem.  ``eta(A, k)`` is the maximal permanent over all
k x k submatrices (the k-cardinality assignment optimum over the entries of
A) and ``delta(A, k)`` restricts the maximum to principal submatrices.
permanent and eta run on the exact incremental matching kernel; delta
enumerates index subsets, with a configurable size cap, and evaluates each
principal permanent through the same kernel.  Brute-force counterparts live
in maxplus.oracle.

Canonical matrix text form: a JSON document {"rows": r, "cols": c,
"data": [[token, ...], ...]} using the scalar token grammar.  A plain
whitespace grid, one row per line with ``-inf`` tokens, is also accepted.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .assignment import matching_ladder
from .errors import CapExceededError, ParseError
from .scalar import EPS, ONE, MaxScalar, Rational, as_scalar, format_scalar

#: Principal-minor enumeration refuses matrices larger than this by default.
DELTA_CAP = 12


class MaxMatrix:
    """An immutable rows x cols matrix over the max-plus semiring."""

    __slots__ = ("_data",)

    def __init__(self, rows: Iterable[Iterable[object]]):
        data = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("a matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("all rows must have the same length")
        self._data = data

    @classmethod
    def filled(cls, rows: int, cols: int, value: object) -> "MaxMatrix":
        v = as_scalar(value)
        return cls([[v] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "MaxMatrix":
        return cls([[ONE if i == j else EPS for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self._data)

    @property
    def cols(self) -> int:
        return len(self._data[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> MaxScalar:
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> tuple[MaxScalar, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[MaxScalar, ...]:
        return tuple(row[j] for row in self._data)

    def entries(self) -> Iterator[MaxScalar]:
        for row in self._data:
            yield from row

    def raw(self) -> list[list[Fraction | None]]:
        """The payload grid (Fraction or None for eps); used by kernels."""
        return [[x.value for x in row] for row in self._data]

    # ------------------------------------------------------------------
    # semiring and Hadamard operations

    def __add__(self, other: "MaxMatrix") -> "MaxMatrix":
        """Entrywise (+)."""
        self._check_same_shape(other)
        return MaxMatrix(
            [a + b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self._data, other._data)
        )

    def __matmul__(self, other: "MaxMatrix") -> "MaxMatrix":
        """Max-plus product: C_ij = max_k (a_ik + b_kj)."""
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        a, b = self.raw(), other.raw()
        bt = list(zip(*b))
        out = []
        for arow in a:
            orow = []
            for bcol in bt:
                best = None
                for x, y in zip(arow, bcol):
                    if x is None or y is None:
                        continue
                    v = x + y
                    if best is None or v > best:
                        best = v
                orow.append(EPS if best is None else MaxScalar(best))
            out.append(orow)
        return MaxMatrix(out)

    def transpose(self) -> "MaxMatrix":
        return MaxMatrix(zip(*self._data))

    @property
    def T(self) -> "MaxMatrix":
        return self.transpose()

    def hadamard(self, other: "MaxMatrix") -> "MaxMatrix":
        """Entrywise (.): standard sums, with eps absorbing."""
        self._check_same_shape(other)
        return MaxMatrix(
            [a * b for a, b in zip(r1, r2)]
            for r1, r2 in zip(self._data, other._data)
        )

    def hpow(self, t: Rational) -> "MaxMatrix":
        """Hadamard power: every entry scaled by t > 0 (t = 1/2 is the root)."""
        return MaxMatrix([x.scaled(t) for x in row] for row in self._data)

    def permute_rows(self, pi: "Permutation") -> "MaxMatrix":
        """Row i of the result is row pi(i); equals pi.matrix() @ self."""
        return MaxMatrix(self._data[pi(i)] for i in range(self.rows))

    def permute_cols(self, tau: "Permutation") -> "MaxMatrix":
        """Column tau(j) of the result is column j; equals self @ tau.matrix()."""
        inv = tau.inverse()
        return MaxMatrix(
            [row[inv(j)] for j in range(self.cols)] for row in self._data
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "MaxMatrix":
        return MaxMatrix([self._data[i][j] for j in cols] for i in rows)

    def _check_same_shape(self, other: "MaxMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def _check_square(self) -> None:
        if not self.is_square:
            raise ValueError(f"square matrix required, got {self.rows}x{self.cols}")

    # ------------------------------------------------------------------
    # value semantics and text forms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MaxMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __str__(self) -> str:
        return "\n".join(
            " ".join(format_scalar(x) for x in row) for row in self._data
        )

    def __repr__(self) -> str:
        return f"MaxMatrix({[[str(x) for x in row] for row in self._data]!r})"

    @classmethod
    def parse(cls, text: str) -> "MaxMatrix":
        """Parse the canonical JSON form or a plain whitespace grid."""
        stripped = text.strip()
        if not stripped:
            raise ParseError("empty matrix text")
        if stripped.startswith("{"):
            try:
                doc = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid matrix JSON: {exc}") from exc
            try:
                rows, cols, data = doc["rows"], doc["cols"], doc["data"]
            except (TypeError, KeyError) as exc:
                raise ParseError("matrix JSON needs fields rows, cols, data") from exc
            if len(data) != rows or any(len(r) != cols for r in data):
                raise ParseError("matrix JSON data does not match rows x cols")
            return cls(data)
        return cls(line.split() for line in stripped.splitlines() if line.strip())

    def format_json(self) -> str:
        """Canonical structured form; bit-exact and re-parseable."""
        doc = {
            "rows": self.rows,
            "cols": self.cols,
            "data": [[format_scalar(x) for x in row] for row in self._data],
        }
        return json.dumps(doc, separators=(", ", ": "))


class Permutation:
    """A bijection of {0..n-1} in one-line notation.

    Its max-plus permutation matrix P has P[i][pi(i)] = 0 and eps elsewhere,
    so that (P @ B) carries row pi(i) of B in row i, and (B @ P) carries
    column j of B in column pi(j).
    """

    __slots__ = ("_images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self._images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def all(cls, n: int) -> Iterator["Permutation"]:
        """Every permutation of {0..n-1}, in lexicographic order."""
        for images in itertools.permutations(range(n)):
            yield cls(images)

    @property
    def n(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    def __call__(self, i: int) -> int:
        return self._images[i]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self._images):
            inv[j] = i
        return Permutation(inv)

    def matrix(self) -> MaxMatrix:
        n = self.n
        return MaxMatrix(
            [ONE if j == self._images[i] else EPS for j in range(n)]
            for i in range(n)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __str__(self) -> str:
        return "(" + " ".join(str(i + 1) for i in self._images) + ")"

    def __repr__(self) -> str:
        return f"Permutation({list(self._images)!r})"


# ----------------------------------------------------------------------
# permanent-like functionals


def eta_ladder(a: MaxMatrix) -> list[MaxScalar]:
    """[eta_0(A), ..., eta_n(A)]: best k-edge assignment weight for each k."""
    a._check_square()
    ladder = matching_ladder(a.raw())
    return [EPS if w is None else MaxScalar(w) for w in ladder]


def eta(a: MaxMatrix, k: int) -> MaxScalar:
    """The maximal permanent over all k x k submatrices of A; eta_0 = 0."""
    a._check_square()
    if not 0 <= k <= a.rows:
        raise ValueError(f"minor order {k} out of range 0..{a.rows}")
    return eta_ladder(a)[k]


def permanent(a: MaxMatrix) -> MaxScalar:
    """perm(A): maximum diagonal sum over permutations.

    Computed as a max-weight perfect bipartite matching with eps entries as
    forbidden edges; eps when no finite perfect matching exists.
    """
    a._check_square()
    return eta_ladder(a)[a.rows]


def delta_ladder(a: MaxMatrix, cap: int = DELTA_CAP) -> list[MaxScalar]:
    """[delta_0(A), ..., delta_n(A)]: maximal principal minors of each order.

    Enumeration over index subsets; no polynomial algorithm is known for the
    principal restriction, so matrices above the cap are refused.
    """
    a._check_square()
    n = a.rows
    if n > cap:
        raise CapExceededError(
            f"principal minor enumeration needs n <= {cap}, got n = {n}"
        )
    raw = a.raw()
    best: list[Fraction | None] = [None] * (n + 1)
    best[0] = Fraction(0)
    for subset in itertools.chain.from_iterable(
        itertools.combinations(range(n), k) for k in range(1, n + 1)
    ):
        sub = [[raw[i][j] for j in subset] for i in subset]
        w = matching_ladder(sub)[len(subset)]
        if w is not None:
            k = len(subset)
            if best[k] is None or w > best[k]:
                best[k] = w
    return [EPS if w is None else MaxScalar(w) for w in best]


def delta(a: MaxMatrix, k: int, cap: int = DELTA_CAP) -> MaxScalar:
    """The maximal principal minor of order k; delta_0 = 0."""
    a._check_square()
    if not 0 <= k <= a.rows:
        raise ValueError(f"minor order {k} out of range 0..{a.rows}")
    return delta_ladder(a, cap=cap)[k]


def norm(a: MaxMatrix) -> MaxScalar:
    """The maximal entry of A."""
    return max(a.entries())


def dot(u: Sequence[MaxScalar], v: Sequence[MaxScalar]) -> MaxScalar:
    """Max-plus scalar product <u, v> = max_i (u_i + v_i)."""
    if len(u) != len(v):
        raise ValueError("scalar product needs vectors of equal length")
    out = EPS
    for x, y in zip(u, v):
        out = out + x * y
    return out


def parse_matrix(text: str) -> MaxMatrix:
    return MaxMatrix.parse(text)


def format_matrix(a: MaxMatrix) -> str:
    return a.format_json()
