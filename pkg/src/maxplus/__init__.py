"""Exact max-plus (tropical) algebra.

Scalars are exact rationals extended by -inf; maxpolynomials carry a full
root/derivative/canonical-form calculus; square matrices carry permanents,
maximal minors and three characteristic maxpolynomials; and the convolution
module evaluates the matrix-side enumerations whose formal equality with the
polynomial-side convolutions this package exists to check.
"""

from .charpoly import (
    ColumnPartition,
    SharedPartition,
    char_poly,
    column_maxima,
    full_char_poly,
    gram,
    gram_char_poly,
    gram_permanent,
    hat,
    is_principally_dominant,
    max_column_partitions,
    nu,
    principal_dominance_failure,
    row_maxima,
    shared_partition,
)
from .convolve import (
    additive_conv_multi,
    additive_conv_rhs,
    hadamard_conv_rhs,
    max_row_conv,
    mult_conv_rhs,
    orienting_permutations,
    pd_conv_rhs,
)
from .errors import CapExceededError, ParseError
from .matrix import (
    MaxMatrix,
    Permutation,
    delta,
    delta_ladder,
    dot,
    eta,
    eta_ladder,
    format_matrix,
    norm,
    parse_matrix,
    permanent,
)
from .oracle import (
    delta_bf,
    eta_bf,
    gen_matrix,
    gen_pd_matrix,
    gen_poly,
    gen_shared_pair,
    permanent_bf,
    roots_bf,
)
from .poly import Maxpolynomial, RootList, functionally_leq
from .scalar import (
    EPS,
    ONE,
    MaxScalar,
    format_scalar,
    odot,
    oplus,
    parse_scalar,
    scale,
)

__all__ = [
    "EPS",
    "ONE",
    "CapExceededError",
    "ColumnPartition",
    "MaxMatrix",
    "Maxpolynomial",
    "MaxScalar",
    "ParseError",
    "Permutation",
    "RootList",
    "SharedPartition",
    "additive_conv_multi",
    "additive_conv_rhs",
    "char_poly",
    "column_maxima",
    "delta",
    "delta_bf",
    "delta_ladder",
    "dot",
    "eta",
    "eta_bf",
    "eta_ladder",
    "format_matrix",
    "format_scalar",
    "full_char_poly",
    "functionally_leq",
    "gen_matrix",
    "gen_pd_matrix",
    "gen_poly",
    "gen_shared_pair",
    "gram",
    "gram_char_poly",
    "gram_permanent",
    "hadamard_conv_rhs",
    "hat",
    "is_principally_dominant",
    "max_column_partitions",
    "max_row_conv",
    "mult_conv_rhs",
    "norm",
    "nu",
    "odot",
    "oplus",
    "orienting_permutations",
    "parse_matrix",
    "parse_scalar",
    "permanent",
    "permanent_bf",
    "pd_conv_rhs",
    "principal_dominance_failure",
    "roots_bf",
    "row_maxima",
    "scale",
    "shared_partition",
]

__version__ = "0.1.0"
