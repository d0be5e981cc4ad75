"""Edge-contraction blockers for vertex cover and graph transversals."""

from .bipartite_contraction import (
    bc_decide,
    coloring_cost,
    coloring_to_contraction,
    contraction_to_coloring,
    monochromatic_components,
)
from .contraction_vc import (
    Decision,
    algorithm1,
    brute_min_contract,
    component_opt,
    contraction_vc_1,
    dp_min_contract,
    min_contract_2approx,
    two_approx_drop,
)
from .graphs import (
    ContractionResult,
    Graph,
    GraphFormatError,
    bipartition,
    connected_components,
    contract_edge,
    contract_set,
    induced_subgraph,
    is_star,
    parse_graph,
    serialize_graph,
    shortest_odd_cycle,
    shortest_path,
)
from .reductions import (
    ClaimReport,
    CleanFormula,
    CleanFormulaError,
    GadgetInstance,
    brute_force_sat,
    build_base,
    build_double_copy_instance,
    build_path_instance,
    build_subdivided_clique_instance,
    clean_formula,
    default_family,
    enumerate_clean_formulas,
    parse_cnf,
    serialize_roles,
    verify_claims,
)
from .transversal import (
    HitFamily,
    Occurrence,
    contains,
    drop_given_edge,
    feedback_vertex_set,
    find_dropping_edge,
    min_transversal,
    odd_cycle_transversal,
)
from .vertex_cover import (
    CoverResult,
    vc_after_contraction,
    vc_bipartite,
    vc_branching,
    vc_with_modulator,
)

__all__ = [
    "ClaimReport",
    "CleanFormula",
    "CleanFormulaError",
    "ContractionResult",
    "CoverResult",
    "Decision",
    "GadgetInstance",
    "Graph",
    "GraphFormatError",
    "HitFamily",
    "Occurrence",
    "algorithm1",
    "bc_decide",
    "bipartition",
    "brute_force_sat",
    "brute_min_contract",
    "build_base",
    "build_double_copy_instance",
    "build_path_instance",
    "build_subdivided_clique_instance",
    "clean_formula",
    "coloring_cost",
    "coloring_to_contraction",
    "component_opt",
    "connected_components",
    "contains",
    "contract_edge",
    "contract_set",
    "contraction_to_coloring",
    "contraction_vc_1",
    "default_family",
    "dp_min_contract",
    "drop_given_edge",
    "enumerate_clean_formulas",
    "feedback_vertex_set",
    "find_dropping_edge",
    "induced_subgraph",
    "is_star",
    "min_contract_2approx",
    "min_transversal",
    "monochromatic_components",
    "odd_cycle_transversal",
    "parse_cnf",
    "parse_graph",
    "serialize_graph",
    "serialize_roles",
    "shortest_odd_cycle",
    "shortest_path",
    "two_approx_drop",
    "vc_after_contraction",
    "vc_bipartite",
    "vc_branching",
    "vc_with_modulator",
    "verify_claims",
]
