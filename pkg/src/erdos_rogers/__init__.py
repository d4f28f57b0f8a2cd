"""Constructions and certified searches around Erdős–Rogers functions.

The package builds the sparse hypergraphs and blowup graphs used in
lower-bound constructions for f_{F,G}(n), runs the accompanying search
engines (independent sets, F-free subsets, dependent random choice,
sunflowers), and emits JSON certificates so every claimed property can be
re-audited from the artifact alone.
"""

from .blowup import (
    BlowupColoring,
    FailureBound,
    is_hom_free,
    random_blowup,
    replay_blowup,
    square_clique_cover,
    theorem1_failure_bound,
)
from .certificates import Certificate, make_manifest, read_manifest, write_manifest
from .covers import Audit, CliqueCover
from .efr import (
    EFRInstance,
    SpherePointSet,
    density_floor,
    efr_certificate,
    efr_hypergraph,
    sphere_points,
)
from .errors import FormatError, InputError, SelfCheckError
from .graphs import (
    Graph,
    VertexSet,
    bipartite_gnp,
    blowup_graph,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    empty_graph,
    gnp_graph,
    graph_from_text,
    graph_to_text,
    induced_subgraph,
    named_graph,
    path_graph,
    petersen_graph,
    read_graph,
    write_graph,
)
from .hypergraphs import (
    Hypergraph,
    find_loose_cycles,
    hypergraph_girth_at_least,
    hypergraph_is_linear,
    hypergraph_is_triangle_free,
    line_intersection_graph,
    read_hypergraph,
    write_hypergraph,
)
from .pipelines import (
    brute_force_f,
    ckfree_subset,
    gfree_graph_reps,
    gplus_family,
    ksfree_recursion,
    ramsey_witness_check,
    random_girth_hypergraph,
    theorem1_build,
    theorem4_part1_build,
    theorem4_part2_build,
)
from .rng import SeededRng
from .search import (
    ckprop_dense_pair,
    dependent_random_choice,
    erdos_rado_sunflower,
    greedy_independent_set,
    hypergraph_independence_violation,
    list_k_cycles,
    max_f_free_subset,
    max_independent_set,
    spencer_independent_set,
    sunflower_threshold,
    validate_sunflower,
)
from .subgraph import contains_subgraph, exhaustive_contains

__all__ = [
    "Audit",
    "BlowupColoring",
    "Certificate",
    "CliqueCover",
    "EFRInstance",
    "FailureBound",
    "FormatError",
    "Graph",
    "Hypergraph",
    "InputError",
    "SeededRng",
    "SelfCheckError",
    "SpherePointSet",
    "VertexSet",
    "bipartite_gnp",
    "blowup_graph",
    "brute_force_f",
    "ckfree_subset",
    "ckprop_dense_pair",
    "complete_bipartite",
    "complete_graph",
    "complete_multipartite",
    "contains_subgraph",
    "cycle_graph",
    "density_floor",
    "dependent_random_choice",
    "efr_certificate",
    "efr_hypergraph",
    "empty_graph",
    "erdos_rado_sunflower",
    "exhaustive_contains",
    "find_loose_cycles",
    "gfree_graph_reps",
    "gnp_graph",
    "gplus_family",
    "graph_from_text",
    "graph_to_text",
    "greedy_independent_set",
    "hypergraph_girth_at_least",
    "hypergraph_independence_violation",
    "hypergraph_is_linear",
    "hypergraph_is_triangle_free",
    "induced_subgraph",
    "is_hom_free",
    "ksfree_recursion",
    "line_intersection_graph",
    "list_k_cycles",
    "make_manifest",
    "max_f_free_subset",
    "max_independent_set",
    "named_graph",
    "path_graph",
    "petersen_graph",
    "ramsey_witness_check",
    "random_blowup",
    "random_girth_hypergraph",
    "read_graph",
    "read_hypergraph",
    "read_manifest",
    "replay_blowup",
    "spencer_independent_set",
    "sphere_points",
    "square_clique_cover",
    "sunflower_threshold",
    "theorem1_build",
    "theorem1_failure_bound",
    "theorem4_part1_build",
    "theorem4_part2_build",
    "validate_sunflower",
    "write_graph",
    "write_hypergraph",
    "write_manifest",
]
