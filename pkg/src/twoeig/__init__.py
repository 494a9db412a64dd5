"""twoeig: minimal two-eigenvalue multiplicity splits of graphs.

Decide whether a graph carries a weighted adjacency involution whose
spectrum has exactly two distinct values with multiplicities [n-1, 1] or
[n-2, 2], and for positive cases synthesize and verify an explicit
witness matrix.
"""
from ._kernels import BACKEND as kernel_backend
from .classify import Classification, Verdict, classify, classify_connected, q_upper_bound_report
from .construct import (
    NotConstructibleError,
    WeightSet,
    WitnessPair,
    block_vectors,
    clique_vectors,
    construct_disconnected,
    construct_join_blocks,
    construct_n1_1,
    construct_oneone,
    construct_with_clique,
    construct_with_k1,
    construct_witness,
    select_weights,
    shift_scale,
    witness_matrix_for,
)
from .cotree import (
    BlockExtraction,
    BlockForm,
    Cotree,
    block_form_layout,
    build_cotree,
    extract_block_form,
    graph_of_cotree,
    realize_block_form,
)
from .dsl import ExpressionSyntaxError, parse_block_dsl
from .graphs import (
    Graph,
    GraphFormatError,
    PathCertificate,
    count_shortest_paths,
    encode_graph6,
    find_induced_p4,
    has_coclique_3,
    parse_edge_list,
    parse_graph6,
    unique_path_bound,
)
from .verify import (
    JacobiConvergenceError,
    VerifyReport,
    involution_residual,
    jacobi_eigenvalues,
    neg_one_multiplicity,
    pattern_conforms,
    verify_matrix,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "BlockExtraction",
    "BlockForm",
    "Classification",
    "Cotree",
    "ExpressionSyntaxError",
    "Graph",
    "GraphFormatError",
    "JacobiConvergenceError",
    "NotConstructibleError",
    "PathCertificate",
    "Verdict",
    "VerifyReport",
    "WeightSet",
    "WitnessPair",
    "block_form_layout",
    "block_vectors",
    "build_cotree",
    "classify",
    "classify_connected",
    "clique_vectors",
    "construct_disconnected",
    "construct_join_blocks",
    "construct_n1_1",
    "construct_oneone",
    "construct_with_clique",
    "construct_with_k1",
    "construct_witness",
    "count_shortest_paths",
    "encode_graph6",
    "extract_block_form",
    "find_induced_p4",
    "graph_of_cotree",
    "has_coclique_3",
    "involution_residual",
    "jacobi_eigenvalues",
    "kernel_backend",
    "neg_one_multiplicity",
    "parse_block_dsl",
    "parse_edge_list",
    "parse_graph6",
    "pattern_conforms",
    "q_upper_bound_report",
    "realize_block_form",
    "select_weights",
    "shift_scale",
    "unique_path_bound",
    "verify_matrix",
    "verify_witness",
    "witness_matrix_for",
]
