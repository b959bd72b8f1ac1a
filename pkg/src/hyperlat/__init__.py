"""Interval hypergraphic posets: orientations, lattice operations and verification."""

from .hypergraph import (
    Hypergraph,
    HypergraphError,
    IntervalHypergraph,
    SchroederTree,
    all_intervals,
    as_interval,
    enumerate_interval_hypergraphs,
    final_intervals,
    final_subinterval_closed,
    initial_intervals,
    initial_subinterval_closed,
    intersection_closed,
    is_distributive_hypergraph,
    is_join_sd_hypergraph,
    is_meet_sd_hypergraph,
    is_schroeder,
    make_hypergraph,
    make_interval_hypergraph,
    reflect,
    schroeder_hypergraph,
)
from .orientations import (
    Orientation,
    OrientationError,
    VertexPoset,
    enumerate_acyclic,
    flip,
    flip_is_legal_interval,
    increasing_flip_targets,
    is_acyclic,
    is_acyclic_interval,
    is_cover,
    parse_orientation,
    reflect_orientation,
    vertex_coordinates,
    vertex_poset,
)
from .weak_order import (
    avoids_pattern,
    fiber,
    fiber_bounds,
    inversions,
    orient,
    parse_permutation,
    weak_join,
    weak_leq,
    weak_meet,
)
from .poset import FinitePoset, PosetError, from_relation
from .hyperlattice import (
    PairIndex,
    SingleIndex,
    distributive_bijection,
    hyp_join,
    hyp_meet,
    is_join_semilattice_morphism,
    is_meet_semilattice_morphism,
    leq_source,
    order_equivalences,
    pair_index_leq,
    pair_index_orientation,
    pair_indices,
    pair_precedes,
    poset_of,
    single_index_orientation,
    single_indices,
    single_precedes,
)

__version__ = "0.1.0"

__all__ = [
    "FinitePoset",
    "PosetError",
    "from_relation",
    "all_intervals",
    "as_interval",
    "avoids_pattern",
    "distributive_bijection",
    "enumerate_acyclic",
    "enumerate_interval_hypergraphs",
    "fiber",
    "fiber_bounds",
    "final_intervals",
    "final_subinterval_closed",
    "flip",
    "flip_is_legal_interval",
    "hyp_join",
    "hyp_meet",
    "Hypergraph",
    "HypergraphError",
    "increasing_flip_targets",
    "initial_intervals",
    "initial_subinterval_closed",
    "intersection_closed",
    "IntervalHypergraph",
    "inversions",
    "is_acyclic",
    "is_acyclic_interval",
    "is_cover",
    "is_distributive_hypergraph",
    "is_join_sd_hypergraph",
    "is_join_semilattice_morphism",
    "is_meet_sd_hypergraph",
    "is_meet_semilattice_morphism",
    "is_schroeder",
    "leq_source",
    "make_hypergraph",
    "make_interval_hypergraph",
    "order_equivalences",
    "orient",
    "Orientation",
    "OrientationError",
    "pair_index_leq",
    "pair_index_orientation",
    "pair_indices",
    "pair_precedes",
    "PairIndex",
    "parse_orientation",
    "parse_permutation",
    "poset_of",
    "reflect",
    "reflect_orientation",
    "schroeder_hypergraph",
    "SchroederTree",
    "single_index_orientation",
    "single_indices",
    "single_precedes",
    "SingleIndex",
    "vertex_coordinates",
    "vertex_poset",
    "VertexPoset",
    "weak_join",
    "weak_leq",
    "weak_meet",
]
