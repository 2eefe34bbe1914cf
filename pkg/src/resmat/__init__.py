"""Resistance matrices of graphs with positive definite matrix edge weights.

The package computes block Laplacians, Laplacian pseudoinverses, and
resistance matrices for connected graphs whose edges carry ``s x s``
symmetric positive definite weight matrices, together with closed forms
for the resistance determinant and inverse, the fixed inertia pattern,
and an eigenvalue interlacing relation — and a verification suite that
re-derives every one of those identities through independent numerical
routes.

Typical use::

    from resmat import cycle_graph, ResistanceWorkspace, run_suite

    g = cycle_graph(4)
    ws = ResistanceWorkspace(g)
    ws.resistance.block(0, 2)     # resistance between vertices 1 and 3
    ws.determinant()              # closed-form det of the resistance matrix
    run_suite(g).passed           # all identity checks
"""

from .graph import (
    Edge,
    GenerationError,
    GraphError,
    MatrixWeightedGraph,
    ValidationReport,
    complete_graph,
    cycle_graph,
    from_edges,
    parse_graph,
    path_graph,
    random_graph,
    serialize,
    star_graph,
    validate,
    validation_report,
)
from .laplacian import (
    BlockMatrix,
    build_incidence,
    build_laplacian,
    laplacian_cofactor,
    laplacian_cofactor_slog,
    stacked_identity,
)
from .linalg import (
    DimensionError,
    Inertia,
    NumericError,
    SpectralDecomposition,
    block_cofactor,
    det_lu,
    inertia_of,
    kron,
    pd_inverse,
    pd_inverse_sqrt,
    pseudo_inverse,
    schur_det,
    slogdet_lu,
    sym_eigen,
)
from .resistance import (
    InterlaceRow,
    ResistanceWorkspace,
    resistance_from_pseudoinverse,
)
from .verify import (
    CHECK_IDS,
    CheckResult,
    CorpusEntry,
    GraphSpec,
    SuiteReport,
    UnknownCheckError,
    run_check,
    run_corpus,
    run_suite,
    scalar_resistance_oracle,
    standard_corpus,
    tree_distance_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # graph model
    "Edge",
    "GenerationError",
    "GraphError",
    "MatrixWeightedGraph",
    "ValidationReport",
    "complete_graph",
    "cycle_graph",
    "from_edges",
    "parse_graph",
    "path_graph",
    "random_graph",
    "serialize",
    "star_graph",
    "validate",
    "validation_report",
    # laplacian
    "BlockMatrix",
    "build_incidence",
    "build_laplacian",
    "laplacian_cofactor",
    "laplacian_cofactor_slog",
    "stacked_identity",
    # linear algebra kernel
    "DimensionError",
    "Inertia",
    "NumericError",
    "SpectralDecomposition",
    "block_cofactor",
    "det_lu",
    "inertia_of",
    "kron",
    "pd_inverse",
    "pd_inverse_sqrt",
    "pseudo_inverse",
    "schur_det",
    "slogdet_lu",
    "sym_eigen",
    # resistance engine
    "InterlaceRow",
    "ResistanceWorkspace",
    "resistance_from_pseudoinverse",
    # verifier
    "CHECK_IDS",
    "CheckResult",
    "CorpusEntry",
    "GraphSpec",
    "SuiteReport",
    "UnknownCheckError",
    "run_check",
    "run_corpus",
    "run_suite",
    "scalar_resistance_oracle",
    "standard_corpus",
    "tree_distance_matrix",
]
