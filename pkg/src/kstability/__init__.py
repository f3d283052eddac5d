"""Exact K-stability criterion for ample classes on the blowup of P2 x P2
along the diagonal, with Bernstein positivity certificates."""

from .amplecone import (
    BundleParams,
    DegenerateScaling,
    EmptyPolytope,
    MomentSegment,
    NormalizedClass,
    NotAmple,
    is_ample,
    kstability_verdict,
    moment_polytope,
    normalize,
)
from .certify import (
    PositivityCertificate,
    TriangleRegion,
    bernstein_coefficients,
    certify_margin_ladder,
    certify_positive,
    prove_closed_triangle,
    replay,
    scan_grid,
)
from .criterion import CriterionReport, Verdict, assemble_C, evaluate_C, reduced_C_tilde
from .ratpoly import BiPoly, NotDivisible, Rational, UniPoly
from .rootdata import ConsistencyFailure, build_P, stated_Q

__version__ = "0.1.0"
