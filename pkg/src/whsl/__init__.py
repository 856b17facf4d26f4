"""whsl: weighted-homogeneous surface singularity classification.

Classifies 2-dimensional normal graded hypersurface singularities
k[x,y,z]/(f) by their a-invariant: enumerates the admissible weight types
(a,b,c;h) for a given a-invariant, reconstructs the fractional-divisor
data realizing each type, and emits the star-shaped resolution graph.
"""

from .arith import cf_evaluate, hj_expansion, solve_branch_congruence
from .dpd import (
    FractionalDivisor,
    deg_total,
    dims_match,
    duality_check,
    floor_deg,
    frac_part,
    gorenstein_check,
    h0_bounds,
    shifted_floor_identities,
)
from .enumerator import (
    ClassificationEntry,
    FamilyEntry,
    ParametricFamily,
    candidate_types,
    classify,
    divisor_search,
    neighbor_nonvanishing_check,
    pg_theorem_check,
    special_alpha_nonpositive,
)
from .graded import (
    NegativeAInvariantError,
    NegativeCoefficientError,
    WeightedType,
    a_invariant,
    deg_D,
    genus,
    geometric_genus,
    hilbert_coeffs,
    normality_filter,
)
from .resolution import (
    ResolutionGraph,
    build_graph,
    intersection_matrix,
    is_negative_definite,
    to_dot,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationEntry",
    "FamilyEntry",
    "FractionalDivisor",
    "NegativeAInvariantError",
    "NegativeCoefficientError",
    "ParametricFamily",
    "ResolutionGraph",
    "WeightedType",
    "a_invariant",
    "build_graph",
    "candidate_types",
    "cf_evaluate",
    "classify",
    "deg_D",
    "deg_total",
    "dims_match",
    "divisor_search",
    "duality_check",
    "floor_deg",
    "frac_part",
    "genus",
    "geometric_genus",
    "gorenstein_check",
    "h0_bounds",
    "hilbert_coeffs",
    "hj_expansion",
    "intersection_matrix",
    "is_negative_definite",
    "neighbor_nonvanishing_check",
    "normality_filter",
    "pg_theorem_check",
    "shifted_floor_identities",
    "solve_branch_congruence",
    "special_alpha_nonpositive",
    "to_dot",
]
