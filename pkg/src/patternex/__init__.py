"""Pattern containment and exact extremal search for 0-1 matrices and
ordered hypergraphs."""

from .containment import (
    HypergraphEmbedding,
    MatrixEmbedding,
    hypergraph_contains,
    klazar_marcus_check,
    matrix_contains,
    order_isomorphic,
    represents,
    submatrix,
    verify_hypergraph_embedding,
    verify_matrix_embedding,
)
from .constructions import (
    GeneratorConfig,
    NormalizeReport,
    TrialStats,
    analytic_expected_weight,
    bipartite_double,
    blowup_graph,
    chain_patterns,
    corner_pad,
    cyclic_pad,
    cyclic_pattern,
    default_density,
    graph_copy_from_doubling,
    interval_contract,
    normalize_edges,
    random_avoider,
    random_avoider_trials,
    satisfies_boundary_condition,
)
from .errors import (
    CapacityError,
    ConsistencyError,
    InputError,
    PatternexError,
    PostconditionError,
)
from .search import (
    ExtremalTable,
    SearchCertificate,
    TableRow,
    count_avoiders,
    estimate_limit,
    ex_matrix,
    exe_hyper,
    exi_hyper,
    f_multi,
    gex_graph,
    table_to_csv,
)
from .structures import (
    BinaryMatrix,
    OrderedHypergraph,
    PartsSpec,
    PermutationSpec,
    associated_hypergraph,
    associated_matrix,
    cross_section,
    d_permutation_matrix,
    distance_vector,
    is_d_partite,
    is_d_permutation_hypergraph,
    is_r_repeated,
    j_tuple_matrix,
    make_hypergraph,
    make_matrix,
    max_repetition,
    permutation_matrix,
    row,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryMatrix",
    "CapacityError",
    "ConsistencyError",
    "ExtremalTable",
    "GeneratorConfig",
    "HypergraphEmbedding",
    "InputError",
    "MatrixEmbedding",
    "NormalizeReport",
    "OrderedHypergraph",
    "PartsSpec",
    "PatternexError",
    "PermutationSpec",
    "PostconditionError",
    "SearchCertificate",
    "TableRow",
    "TrialStats",
    "analytic_expected_weight",
    "associated_hypergraph",
    "associated_matrix",
    "bipartite_double",
    "blowup_graph",
    "chain_patterns",
    "corner_pad",
    "count_avoiders",
    "cross_section",
    "cyclic_pad",
    "cyclic_pattern",
    "d_permutation_matrix",
    "default_density",
    "distance_vector",
    "estimate_limit",
    "ex_matrix",
    "exe_hyper",
    "exi_hyper",
    "f_multi",
    "gex_graph",
    "graph_copy_from_doubling",
    "hypergraph_contains",
    "interval_contract",
    "is_d_partite",
    "is_d_permutation_hypergraph",
    "is_r_repeated",
    "j_tuple_matrix",
    "klazar_marcus_check",
    "make_hypergraph",
    "make_matrix",
    "matrix_contains",
    "max_repetition",
    "normalize_edges",
    "order_isomorphic",
    "permutation_matrix",
    "random_avoider",
    "random_avoider_trials",
    "represents",
    "row",
    "satisfies_boundary_condition",
    "submatrix",
    "table_to_csv",
    "verify_hypergraph_embedding",
    "verify_matrix_embedding",
]
