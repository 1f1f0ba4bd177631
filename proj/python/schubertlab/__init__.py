"""Exact lattice-point computations: Schubert polynomials, Gelfand-Tsetlin
polytopes, Minkowski sums of their embeddings, and flow networks."""

from schubertlab._core import (
    avoids_patterns,
    flagged_character,
    flow_count,
    flow_equiv,
    gt_count,
    gt_lattice,
    is_column_convex,
    minkowski_count,
    minkowski_lattice,
    par_family,
    rothe_diagram,
    schubert,
    schur,
    verify_theorem1,
)

__all__ = [
    "avoids_patterns",
    "flagged_character",
    "flow_count",
    "flow_equiv",
    "gt_count",
    "gt_lattice",
    "is_column_convex",
    "minkowski_count",
    "minkowski_lattice",
    "par_family",
    "rothe_diagram",
    "schubert",
    "schur",
    "verify_theorem1",
]
