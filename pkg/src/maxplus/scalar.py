"""Exact max-plus scalars.

The carrier is R u {-inf} with addition a (+) b = max(a, b) and
multiplication a (.) b = a + b.  The additive identity is eps = -inf and the
multiplicative identity is 0.  Finite values are exact rationals
(fractions.Fraction); -inf is a tagged variant of MaxScalar, never a float
sentinel, so the absorbing and convention rules are explicit:

  * eps is absorbing for (.) and neutral for (+),
  * eps < q for every rational q (the order is total),
  * eps - eps = eps, eps - q = eps; q - eps is undefined and raises.

The text token grammar used by every file format and the CLI is an
optional-sign integer, fraction ``p/q`` or decimal, or the literal ``-inf``.
Round-trips through ``parse_scalar``/``format_scalar`` are bit-exact.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN_RE = re.compile(r"[+-]?(\d+(/\d+|\.\d+)?|\.\d+)\Z")

Rational = int | Fraction


class MaxScalar:
    """An element of the max-plus semiring: a rational number or eps = -inf."""

    __slots__ = ("_v",)

    def __init__(self, value: int | str | Fraction | "MaxScalar"):
        if isinstance(value, MaxScalar):
            self._v = value._v
            return
        if isinstance(value, bool) or isinstance(value, float):
            raise TypeError("MaxScalar is exact; floats and bools are not accepted")
        if isinstance(value, str):
            self._v = _parse_token(value)
            return
        if isinstance(value, (int, Fraction)):
            self._v = Fraction(value)
            return
        raise TypeError(f"cannot build a MaxScalar from {type(value).__name__}")

    @classmethod
    def _eps(cls) -> "MaxScalar":
        obj = object.__new__(cls)
        obj._v = None
        return obj

    @property
    def is_eps(self) -> bool:
        return self._v is None

    @property
    def value(self) -> Fraction | None:
        """The rational payload, or None for eps."""
        return self._v

    def __add__(self, other: "MaxScalar") -> "MaxScalar":
        """Max-plus addition: the maximum under the total order."""
        return self if other < self else other

    def __mul__(self, other: "MaxScalar") -> "MaxScalar":
        """Max-plus multiplication: standard addition; eps absorbs."""
        if self._v is None or other._v is None:
            return EPS
        return MaxScalar(self._v + other._v)

    def __sub__(self, other: "MaxScalar") -> "MaxScalar":
        """Standard difference with the conventions eps - eps = eps - q = eps.

        A finite minuend with an eps subtrahend would be +inf, which is
        outside the carrier, so it raises instead.
        """
        if self._v is None:
            return EPS
        if other._v is None:
            raise ValueError("difference of a finite value and -inf is undefined")
        return MaxScalar(self._v - other._v)

    def scaled(self, t: Rational) -> "MaxScalar":
        """Standard multiple t * a for t > 0; the scalar Hadamard power."""
        t = Fraction(t)
        if t <= 0:
            raise ValueError(f"scaling factor must be positive, got {t}")
        if self._v is None:
            return EPS
        return MaxScalar(self._v * t)

    def __lt__(self, other: "MaxScalar") -> bool:
        if self._v is None:
            return other._v is not None
        if other._v is None:
            return False
        return self._v < other._v

    def __le__(self, other: "MaxScalar") -> bool:
        return not other < self

    def __gt__(self, other: "MaxScalar") -> bool:
        return other < self

    def __ge__(self, other: "MaxScalar") -> bool:
        return not self < other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MaxScalar):
            return NotImplemented
        return self._v == other._v

    def __hash__(self) -> int:
        return hash(self._v)

    def __str__(self) -> str:
        return "-inf" if self._v is None else str(self._v)

    def __repr__(self) -> str:
        return f"MaxScalar({str(self)!r})"


#: The additive identity eps = -inf (absorbing for multiplication).
EPS = MaxScalar._eps()

#: The multiplicative identity, the rational 0.
ONE = MaxScalar(0)


def _parse_token(token: str) -> Fraction | None:
    text = token.strip()
    if text == "-inf":
        return None
    if not _TOKEN_RE.fullmatch(text):
        raise ParseError(f"invalid scalar token: {token!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError as exc:
        raise ParseError(f"zero denominator in scalar token: {token!r}") from exc


def parse_scalar(token: str) -> MaxScalar:
    """Parse a scalar token: ``-inf``, an integer, ``p/q`` or a decimal."""
    v = _parse_token(token)
    return EPS if v is None else MaxScalar(v)


def format_scalar(a: MaxScalar) -> str:
    """Canonical token for a scalar; parse_scalar(format_scalar(a)) == a."""
    return str(a)


def oplus(a: MaxScalar, b: MaxScalar) -> MaxScalar:
    """a (+) b = max(a, b)."""
    return a + b


def odot(a: MaxScalar, b: MaxScalar) -> MaxScalar:
    """a (.) b = a + b in standard arithmetic; eps absorbs."""
    return a * b


def scale(a: MaxScalar, t: Rational) -> MaxScalar:
    """t * a in standard arithmetic for t > 0; scale(eps, t) = eps."""
    return a.scaled(t)


def as_scalar(x: object) -> MaxScalar:
    """Coerce an entry (MaxScalar, int, Fraction or token string) to MaxScalar."""
    if isinstance(x, MaxScalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError("MaxScalar entries must be exact (int, Fraction or token)")
    if isinstance(x, (int, Fraction)):
        return MaxScalar(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to MaxScalar")
