"""Shared fixtures: the worked example matrices and hypothesis strategies."""

from __future__ import annotations

from fractions import Fraction

import hypothesis.strategies as st

from maxplus import EPS, MaxMatrix, Maxpolynomial, MaxScalar

# the symmetric 2x2 pair: SYM_A is principally dominant, SYM_B is not,
# SYM_B_PRIME is the dominant replacement with the same eigenvalues
SYM_A = MaxMatrix([[2, "-inf"], ["-inf", 0]])
SYM_B = MaxMatrix([[0, 10], [10, 0]])
SYM_B_PRIME = MaxMatrix([[10, 0], [0, 10]])

# a 4x4 sum of two principally dominant matrices that is not itself dominant
SUM_LEFT = MaxMatrix([[6, 5, 0, 0], [5, 0, 3, 0], [0, 2, 0, 0], [0, 0, 0, 0]])
SUM_RIGHT = MaxMatrix([[6, 5, 0, 0], [5, 0, 0, 2], [0, 0, 0, 0], [0, 3, 0, 0]])
SUM_TOTAL = MaxMatrix([[6, 5, 0, 0], [5, 0, 3, 2], [0, 2, 0, 0], [0, 3, 0, 0]])

# the worked 4x4 multiplicative-convolution pair
WORKED_A = MaxMatrix([[2, 0, 3, -1], [0, 0, 1, 1], [-2, 2, 2, 1], [2, -1, 1, 1]])
WORKED_B = MaxMatrix([[0, 0, -2, 2], [-2, 1, -1, -1], [-1, 0, -3, -1], [-1, -2, -1, 0]])


def ms(x) -> MaxScalar:
    return EPS if x == "-inf" else MaxScalar(x)


def poly(*coeffs) -> Maxpolynomial:
    return Maxpolynomial(coeffs)


def roots_of(*values) -> tuple[MaxScalar, ...]:
    return tuple(ms(v) for v in values)


# ----------------------------------------------------------------------
# hypothesis strategies over a small rational pool (ties are the point)

rationals = st.one_of(
    st.integers(-5, 10).map(Fraction),
    st.builds(Fraction, st.integers(-8, 12), st.integers(1, 4)),
)

finite_scalars = rationals.map(MaxScalar)

scalars = st.one_of(st.just(EPS), finite_scalars)


@st.composite
def polys(draw, max_degree: int = 6) -> Maxpolynomial:
    low = draw(st.lists(scalars, min_size=0, max_size=max_degree))
    lead = draw(finite_scalars)
    return Maxpolynomial(low + [lead])


@st.composite
def fcf_polys(draw, max_degree: int = 6) -> Maxpolynomial:
    lead = draw(finite_scalars)
    rs = draw(st.lists(scalars, min_size=0, max_size=max_degree))
    return Maxpolynomial.from_roots(lead, rs)
