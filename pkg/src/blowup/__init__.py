"""Numerical invariants of rank-2 bundles on the blow-up of C^2 at a point.

A bundle of splitting type j is given by the transition matrix
``[[z^j, p], [0, z^-j]]`` with p in normal form.  ``compute_invariants``
returns the lengths l(Q) (cokernel of M -> M^vv for the direct image
stalk M) and l(R^1), and their sum, the charge.
"""

__version__ = "0.1.0"

from .errors import (
    BlowupError,
    NonFiniteLength,
    NormalFormError,
    RankAssertionFailure,
    StabilityViolation,
    StabilizationFailure,
)
from .invariants import InvariantReport, compute_invariants, survey, verify_bounds
from .linalg import BACKEND
from .localmodule import TruncationParams
from .moduli import (
    closed_form_generic,
    closed_form_split,
    e,
    enumerate_monomials,
    stratify,
    stratify_j2,
    stratify_j3,
    stratum_by_invariants,
)
from .polyexpr import format_poly, parse_poly
from .ring import BundleSpec, ChartMonomial, Poly, VecSection

__all__ = [
    "BACKEND",
    "BlowupError",
    "BundleSpec",
    "ChartMonomial",
    "InvariantReport",
    "NonFiniteLength",
    "NormalFormError",
    "Poly",
    "RankAssertionFailure",
    "StabilityViolation",
    "StabilizationFailure",
    "TruncationParams",
    "VecSection",
    "closed_form_generic",
    "closed_form_split",
    "compute_invariants",
    "e",
    "enumerate_monomials",
    "format_poly",
    "parse_poly",
    "stratify",
    "stratify_j2",
    "stratify_j3",
    "stratum_by_invariants",
    "survey",
    "verify_bounds",
]
