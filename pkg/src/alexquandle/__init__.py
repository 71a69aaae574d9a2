"""Alexander polynomials of braid closures and their colorings by Alexander quandles."""

from .braid import BraidWord, closure_components, format_braid, parse_braid
from .burau import burau_generator, burau_reduced, burau_unreduced, reduced_alexander
from .coloring import (
    Classification,
    Coloring,
    FiniteQuandle,
    Verdict,
    classify,
    coloring_space_summary,
    construct_coloring,
    count_colorings_finite,
    count_colorings_kernel,
    kernel_basis_zero_delta,
    propagate,
    verify_coloring,
)
from .laurent import LaurentPoly, format_poly, lp_divide_exact, lp_gcd, parse_poly
from .linalg import det_bareiss, echelonize, quotient_rank_report, solve_with_free_vars
from .matrix import LambdaMatrix
from .quotient import QuotientCtx, q_equal, q_is_trivial_vector, q_reduce

__version__ = "0.1.0"
