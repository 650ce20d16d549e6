"""Exact-computation workbench for generalized Turán-type counting problems.

Counts pattern copies in hosts exactly, evaluates the closed-form and
asymptotic quantities attached to complete multipartite extremal graphs,
extracts decomposition families, and runs exact or heuristic extremal
searches at small scale — all over arbitrary-precision integers and
rationals, with graph6 as the interchange format.
"""

from __future__ import annotations

from .analytic import (
    AnalyticEval,
    ThresholdCase,
    bipartite_offset_gain,
    boundary_pairs,
    classify,
    log_count_profile,
    offset_gain_limit,
    offset_gain_limit_deriv0,
    offset_gain_rate,
    profile_curvature_closed,
    profile_curvature_numeric,
    scaled_degree_step,
    stability_integral,
    step_ratio_error,
    step_ratio_poly,
    step_ratio_poly_exact,
    step_scale,
    transfer_identity_check,
)
from .closedform import (
    Composition,
    EckhoffSplit,
    Params,
    anchored_degree_count,
    check_count_step_identity,
    eckhoff_bound,
    eckhoff_decompose,
    kst_asymptotic_constant,
    multipartite_pattern_count,
    multiplicity_for,
    pointed_pattern_count,
    step_asymptotic_constant,
    turan_clique_count,
    turan_edge_count,
    turan_kst_count,
    turan_min_clique_degree,
    turan_part_sizes,
)
from .counting import (
    Pattern,
    as_pattern,
    automorphism_count,
    clique_number,
    contains_any,
    contains_subgraph,
    count_cliques,
    count_copies,
    count_embeddings,
    embeddings_through_edge,
    embeddings_through_vertex,
    exists_embedding,
    min_pattern_degree,
    pattern_degree,
)
from .errors import ConfigError, InternalCheckError, SearchCapError
from .family import (
    BiexResult,
    DecompositionFamily,
    biex,
    decomposition_family,
    is_edge_critical,
    is_family_free,
    lower_bound_construction,
    min_color_class_size,
)
from .graphs import (
    Graph,
    VertexPartition,
    anchored_turan_graph,
    blowup,
    canonical_form,
    canonical_graph,
    chromatic_number,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    graph6_decode,
    graph6_encode,
    graph_from_edges,
    is_isomorphic,
    path_graph,
    proper_partitions,
    read_edge_list,
    relabel,
    subgraph,
    turan_graph,
)
from .search import (
    ExtremalResult,
    SearchConfig,
    extremal_exact,
    extremal_local_search,
    extremal_multipartite,
    free_graph_classes,
)
from .shorthand import parse_graph

__version__ = "0.1.0"

__all__ = [
    "AnalyticEval",
    "BiexResult",
    "Composition",
    "ConfigError",
    "DecompositionFamily",
    "EckhoffSplit",
    "ExtremalResult",
    "Graph",
    "InternalCheckError",
    "Params",
    "Pattern",
    "SearchCapError",
    "SearchConfig",
    "ThresholdCase",
    "VertexPartition",
    "anchored_degree_count",
    "anchored_turan_graph",
    "as_pattern",
    "automorphism_count",
    "biex",
    "bipartite_offset_gain",
    "blowup",
    "boundary_pairs",
    "canonical_form",
    "canonical_graph",
    "check_count_step_identity",
    "chromatic_number",
    "classify",
    "clique_number",
    "complete_graph",
    "complete_multipartite",
    "contains_any",
    "contains_subgraph",
    "count_cliques",
    "count_copies",
    "count_embeddings",
    "cycle_graph",
    "decomposition_family",
    "eckhoff_bound",
    "eckhoff_decompose",
    "embeddings_through_edge",
    "embeddings_through_vertex",
    "empty_graph",
    "exists_embedding",
    "extremal_exact",
    "extremal_local_search",
    "extremal_multipartite",
    "free_graph_classes",
    "graph6_decode",
    "graph6_encode",
    "graph_from_edges",
    "is_edge_critical",
    "is_family_free",
    "is_isomorphic",
    "kst_asymptotic_constant",
    "log_count_profile",
    "lower_bound_construction",
    "min_color_class_size",
    "min_pattern_degree",
    "multipartite_pattern_count",
    "multiplicity_for",
    "offset_gain_limit",
    "offset_gain_limit_deriv0",
    "offset_gain_rate",
    "parse_graph",
    "path_graph",
    "pattern_degree",
    "pointed_pattern_count",
    "profile_curvature_closed",
    "profile_curvature_numeric",
    "proper_partitions",
    "read_edge_list",
    "relabel",
    "scaled_degree_step",
    "stability_integral",
    "step_asymptotic_constant",
    "step_ratio_error",
    "step_ratio_poly",
    "step_ratio_poly_exact",
    "step_scale",
    "subgraph",
    "transfer_identity_check",
    "turan_clique_count",
    "turan_edge_count",
    "turan_graph",
    "turan_kst_count",
    "turan_min_clique_degree",
    "turan_part_sizes",
]
