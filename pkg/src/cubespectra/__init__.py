"""Largest eigenvalues of random subgraphs of the n-dimensional cube.

The package samples subgraphs of the hypercube where each edge survives
independently with probability p, computes the largest adjacency eigenvalue
matrix-free, and compares it against degree-based predictions and bounds.
"""

from .components import (
    Case4Report,
    Component,
    ComponentCensus,
    case4_cutoff,
    case4_shape_check,
    connected_components,
    expected_yk_upper,
    is_star,
    per_component_lambda1,
)
from .cube_graph import (
    HypercubeSubgraph,
    SampleParams,
    degree,
    degree_histogram,
    degrees,
    derive_seed,
    from_edge_list,
    full_cube,
    max_degree,
    read_edge_file,
    sample_subgraph,
    to_edge_list,
    validate_graph,
    write_edge_file,
)
from .degree_theory import (
    DegreeProfile,
    chernoff_degree_tail,
    classify_regime,
    constant_p_coefficient,
    degree_profile,
    exceed_table,
    expected_exceed_count,
    kappa,
    predicted_max_degree,
    prob_max_degree_ge,
    prob_max_degree_lt,
)
from .eigensolve import (
    SolverConfig,
    SpectralResult,
    apply_adjacency,
    dense_adjacency,
    dense_spectrum,
    jacobi_eigenvalues,
    lanczos_lambda1,
    matvec,
    start_vector,
)
from .experiment import (
    ExperimentConfig,
    SchemaError,
    SummaryRow,
    TrialRecord,
    parse_p_rule,
    plot_ratio,
    read_records,
    run_experiment,
    summarize,
    verify_suite,
    write_records,
)
from .locality_stats import (
    LocalityReport,
    ball_size,
    cluster_counts,
    high_degree_near,
    lemma22_i_stat,
    lemma22_ii_stat,
)
from .spectral_bounds import (
    BoundReport,
    bipartite_product_bound,
    bound_report,
    common_cube_neighbors,
    parity_sides,
    sandwich_bounds,
    sqrt_edges_bound,
    theorem_prediction,
    walk2_max,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "Case4Report",
    "Component",
    "ComponentCensus",
    "DegreeProfile",
    "ExperimentConfig",
    "HypercubeSubgraph",
    "LocalityReport",
    "SampleParams",
    "SchemaError",
    "SolverConfig",
    "SpectralResult",
    "SummaryRow",
    "TrialRecord",
    "apply_adjacency",
    "ball_size",
    "bipartite_product_bound",
    "bound_report",
    "case4_cutoff",
    "case4_shape_check",
    "chernoff_degree_tail",
    "classify_regime",
    "cluster_counts",
    "common_cube_neighbors",
    "connected_components",
    "constant_p_coefficient",
    "degree",
    "degree_histogram",
    "degree_profile",
    "degrees",
    "dense_adjacency",
    "dense_spectrum",
    "derive_seed",
    "exceed_table",
    "expected_exceed_count",
    "expected_yk_upper",
    "from_edge_list",
    "full_cube",
    "high_degree_near",
    "is_star",
    "jacobi_eigenvalues",
    "kappa",
    "lanczos_lambda1",
    "lemma22_i_stat",
    "lemma22_ii_stat",
    "matvec",
    "max_degree",
    "parity_sides",
    "parse_p_rule",
    "per_component_lambda1",
    "plot_ratio",
    "predicted_max_degree",
    "prob_max_degree_ge",
    "prob_max_degree_lt",
    "read_edge_file",
    "read_records",
    "run_experiment",
    "sample_subgraph",
    "sandwich_bounds",
    "sqrt_edges_bound",
    "start_vector",
    "summarize",
    "theorem_prediction",
    "to_edge_list",
    "validate_graph",
    "verify_suite",
    "walk2_max",
    "write_edge_file",
    "write_records",
]
