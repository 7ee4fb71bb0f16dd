"""Exact construction and verification of moment sequences.

New sequences are built from a known moment sequence with polynomial
operators, and checked with exact Hankel-matrix criteria.
"""

from .hankel import (
    CheckReport,
    check_hamburger,
    check_interval,
    check_stieltjes,
    check_total_nonneg,
    hankel_matrix,
)
from .interval import QuadraticInterval, map_interval
from .linalg import BudgetExceeded, ExactMatrix, det, is_psd, min_minor
from .poly import (
    MultiPoly,
    PolySyntaxError,
    eval_poly,
    is_homogeneous,
    is_symmetric,
    minor_poly,
    parse_poly,
    poly_arith,
    quadratic_form_poly,
    symmetrize,
    to_text,
    vandermonde_poly,
)
from .positivity import (
    DomainSpec,
    PositivityVerdict,
    check_nonneg,
    compare_min,
    copositive_check,
    grid_search,
    half_degree_reduce,
)
from .seq import SequencePrefix, catalog, combine, interval_transform, shift
from .transform import (
    MinorSpec,
    apply_tp,
    copositive_form_sequence,
    dirac_witness,
    minor_sequence,
    riesz,
)

__version__ = "0.1.0"
