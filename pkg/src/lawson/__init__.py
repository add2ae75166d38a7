"""Exact calculator for cycle-space homology rank tables of composed
algebraic varieties, their Euler profiles, and higher Chow ranks.

The workflow is: describe a variety with the constructors in
:mod:`lawson.varieties` or the textual language in :mod:`lawson.dsl`, then
:func:`evaluate` it to a sparse bigraded table of exact integer ranks.
Closed forms and decomposition routes deliberately overlap so that
:func:`run_checks` can replay them against each other.
"""

from .dsl import MAX_LITERAL, ParseError, SourceSpan, parse
from .engine import (
    CHECK_SUITES,
    CheckResult,
    EvaluationResult,
    UnsupportedQueryError,
    cellular_table,
    chi_toric,
    chi_torus,
    cstar_product,
    decompose,
    euler_profile,
    evaluate,
    fiber_bundle_table,
    higher_chow,
    hilb_table,
    quadric_table,
    run_checks,
    sp_table,
    suspend,
    toric_smooth_table,
    torus_table,
)
from .grading import (
    BiGradedTable,
    ChiProfile,
    Coefficients,
    LawsonRangeError,
    binomial,
    chi_profile,
    euler_chi,
    rank_at,
    shift_and_sum,
)
from .series import (
    TruncatedBiSeries,
    cheah_series,
    geometric_factor,
    macdonald_series,
    one,
    series_mul,
)
from .varieties import (
    AffineSpace,
    Cellular,
    CellularFiberBundle,
    Decomposition,
    FixedComponent,
    HilbertScheme,
    Point,
    Product,
    ProjectiveSpace,
    SingularHypersurface,
    Smoothness,
    SplitQuadric,
    Suspension,
    SymmetricProduct,
    Toric,
    Torus,
    ValidationError,
    VarietyAttributes,
    VarietyExpr,
    render,
    smooth_toric_betti,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSpace",
    "BiGradedTable",
    "CHECK_SUITES",
    "Cellular",
    "CellularFiberBundle",
    "CheckResult",
    "ChiProfile",
    "Coefficients",
    "Decomposition",
    "EvaluationResult",
    "FixedComponent",
    "HilbertScheme",
    "LawsonRangeError",
    "MAX_LITERAL",
    "ParseError",
    "Point",
    "Product",
    "ProjectiveSpace",
    "SingularHypersurface",
    "Smoothness",
    "SourceSpan",
    "SplitQuadric",
    "Suspension",
    "SymmetricProduct",
    "Toric",
    "Torus",
    "TruncatedBiSeries",
    "UnsupportedQueryError",
    "ValidationError",
    "VarietyAttributes",
    "VarietyExpr",
    "binomial",
    "cellular_table",
    "cheah_series",
    "chi_profile",
    "chi_toric",
    "chi_torus",
    "cstar_product",
    "decompose",
    "euler_chi",
    "euler_profile",
    "evaluate",
    "fiber_bundle_table",
    "geometric_factor",
    "higher_chow",
    "hilb_table",
    "macdonald_series",
    "one",
    "parse",
    "quadric_table",
    "rank_at",
    "render",
    "run_checks",
    "series_mul",
    "shift_and_sum",
    "smooth_toric_betti",
    "sp_table",
    "suspend",
    "toric_smooth_table",
    "torus_table",
    "validate",
]
