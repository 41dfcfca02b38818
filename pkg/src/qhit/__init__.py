"""Combinatorics of rank-two spectral degenerations.

The package computes with enhanced level graphs (dual graphs of stable
curves carrying a level structure and per-edge enhancements), their
canonical double covers, numerical polarizations and stability of
multidegrees on the covers, boundary graphs of the space of quadratic
differentials over a fixed smooth curve, and degree-level spectral
bookkeeping.  All stability arithmetic is exact rational.
"""

__version__ = "0.1.0"

from .graphs import (
    EnhancedLevelGraph,
    Leg,
    Edge,
    Vertex,
    Subcurve,
    StructuralError,
    ValidationReport,
    arithmetic_genus,
    subcurve_stats,
    validate,
)
from .covers import (
    CoverGraph,
    enumerate_double_covers,
    genus_count,
    mu_hat,
)
from .collisions import boundary_divisors, enumerate_collision_graphs
from .polarization import (
    MultidegreeClass,
    NumericalPolarization,
    check_degenerate_on,
    component_count,
    enumerate_semistable,
    enumerate_strata,
    gcd_nondegeneracy,
    is_semistable,
    phi_canonical,
    spanning_tree_count,
)
from .spectral import (
    det_degree_feasible,
    induced_polarization,
    prym_degree_feasible,
    pushforward_multidegree,
    twist_bundle_degrees,
)
from .compare import (
    FiberComparisonReport,
    ZeroProfile,
    compare_fibers,
    compare_square,
    hitchin_component_count,
    hitchin_strata,
)

__all__ = [
    "EnhancedLevelGraph",
    "Vertex",
    "Edge",
    "Leg",
    "Subcurve",
    "StructuralError",
    "ValidationReport",
    "validate",
    "arithmetic_genus",
    "subcurve_stats",
    "CoverGraph",
    "mu_hat",
    "genus_count",
    "enumerate_double_covers",
    "enumerate_collision_graphs",
    "boundary_divisors",
    "NumericalPolarization",
    "MultidegreeClass",
    "phi_canonical",
    "gcd_nondegeneracy",
    "check_degenerate_on",
    "is_semistable",
    "enumerate_semistable",
    "enumerate_strata",
    "component_count",
    "spanning_tree_count",
    "twist_bundle_degrees",
    "induced_polarization",
    "pushforward_multidegree",
    "prym_degree_feasible",
    "det_degree_feasible",
    "ZeroProfile",
    "FiberComparisonReport",
    "hitchin_strata",
    "hitchin_component_count",
    "compare_fibers",
    "compare_square",
]
