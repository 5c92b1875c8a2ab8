"""Generalized paths and cycles in semicomplete multipartite digraphs."""

from .digraph import (
    PartitionedDigraph,
    ValidationReport,
    WeightedCompletion,
    augment_terminals,
    contract_partite,
    induce,
    is_k_strong,
    is_strong,
    strong_components,
    validate,
    weighted_completion,
)
from .walks import (
    GFactor,
    GWalk,
    Partner,
    canonical_cycle,
    cycle,
    decompose_segments,
    find_partner,
    insert_by_partners,
    is_good,
    is_spanning,
    parse_walk,
    path,
    render_walk,
    validate_walk,
    walk_length,
)

from .construct import (
    absorb_to_spanning,
    good_gcycle_length_c,
    good_gpath_length_c_minus_1,
    grow_factor,
    longest_gpath,
    merge_path_cycle,
)
from .extended import spanning_gcycle_extsd
from .factor import c_f, max_arc_gcycle_factor, max_arc_path_cycle_subdigraph
from .irreducible import make_irreducible, spanning_gcycle_strong
from .search import (
    exact_ham_cycle,
    exact_xy_spanning_gpath,
    jump_metrics,
    oracle_longest_gpath,
    oracle_longest_spanning_gcycle,
    spanning_gcycle_at_least,
)

__all__ = [
    "PartitionedDigraph",
    "absorb_to_spanning",
    "c_f",
    "exact_ham_cycle",
    "exact_xy_spanning_gpath",
    "good_gcycle_length_c",
    "good_gpath_length_c_minus_1",
    "grow_factor",
    "jump_metrics",
    "longest_gpath",
    "make_irreducible",
    "max_arc_gcycle_factor",
    "max_arc_path_cycle_subdigraph",
    "merge_path_cycle",
    "oracle_longest_gpath",
    "oracle_longest_spanning_gcycle",
    "spanning_gcycle_at_least",
    "spanning_gcycle_extsd",
    "spanning_gcycle_strong",
    "ValidationReport",
    "WeightedCompletion",
    "GFactor",
    "GWalk",
    "Partner",
    "augment_terminals",
    "canonical_cycle",
    "contract_partite",
    "cycle",
    "decompose_segments",
    "find_partner",
    "induce",
    "insert_by_partners",
    "is_good",
    "is_k_strong",
    "is_spanning",
    "is_strong",
    "parse_walk",
    "path",
    "render_walk",
    "strong_components",
    "validate",
    "validate_walk",
    "walk_length",
    "weighted_completion",
]
