"""Triangulations of sphere bundles over the circle.

Construction side: scheduled stacked spheres, handle addition (facet
identification), the Kuehnel cyclic complexes, and bistellar edge filling
covering every feasible (vertex count, edge count) pair.  Verification side:
exact f/h/g-vector arithmetic, the closed-manifold linear relations,
rational Betti numbers, orientability, and combinatorial isomorphism.
"""

from .complexes import (
    Complex,
    FVector,
    GVector,
    HVector,
    PseudomanifoldReport,
    euler_characteristic,
    f_from_h,
    f_vector,
    from_facets,
    g_vector,
    graph_distance,
    h_from_f,
    induced_subcomplex,
    is_pseudomanifold,
    klee_residual,
    link,
)
from .stacked import (
    DistanceTable,
    Stack,
    StackDecomposition,
    SubdivisionStep,
    SubdivisionTrace,
    boundary_of_simplex,
    build_delta,
    distance_table,
    random_stacked_sphere,
    recognize_stacked,
    stack_decomposition,
    subdivide_facet,
)
from .handles import (
    BundleType,
    CrossPairDistanceWarning,
    Pairing,
    build_iss,
    build_iss_variant,
    build_miss,
    handle_addition,
    kuhnel_complex,
    orientation_double_cover,
    standard_pairing,
    swapped_pairing,
    two_stack_reduction,
)
from .moves import (
    FillSchedule,
    MoveSpec,
    apply_move,
    build_fill_schedule,
    feasible_region,
    fill_to,
    is_flippable,
)
from .verify import (
    IsoWitness,
    ManifoldEvidence,
    are_isomorphic,
    betti_numbers,
    boundary_matrix,
    manifold_evidence,
    orientability,
)
from .fileio import AnalysisReport, analyze, parse, write
from . import errors

__all__ = [
    "AnalysisReport",
    "BundleType",
    "Complex",
    "CrossPairDistanceWarning",
    "DistanceTable",
    "FVector",
    "FillSchedule",
    "GVector",
    "HVector",
    "IsoWitness",
    "ManifoldEvidence",
    "MoveSpec",
    "Pairing",
    "PseudomanifoldReport",
    "Stack",
    "StackDecomposition",
    "SubdivisionStep",
    "SubdivisionTrace",
    "analyze",
    "apply_move",
    "are_isomorphic",
    "betti_numbers",
    "boundary_matrix",
    "boundary_of_simplex",
    "build_delta",
    "build_fill_schedule",
    "build_iss",
    "build_iss_variant",
    "build_miss",
    "distance_table",
    "errors",
    "euler_characteristic",
    "f_from_h",
    "f_vector",
    "feasible_region",
    "fill_to",
    "from_facets",
    "g_vector",
    "graph_distance",
    "h_from_f",
    "handle_addition",
    "induced_subcomplex",
    "is_flippable",
    "is_pseudomanifold",
    "klee_residual",
    "kuhnel_complex",
    "link",
    "manifold_evidence",
    "orientability",
    "orientation_double_cover",
    "parse",
    "random_stacked_sphere",
    "recognize_stacked",
    "stack_decomposition",
    "standard_pairing",
    "subdivide_facet",
    "swapped_pairing",
    "two_stack_reduction",
    "write",
]
